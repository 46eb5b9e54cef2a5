"""Budget configuration package."""

from .budget_config import (
    BudgetConfig,
    KnotBudget,
    MacroBudget,
    SearchBudget,
    load_budget_config,
)

__all__ = [
    "BudgetConfig",
    "KnotBudget",
    "MacroBudget",
    "SearchBudget",
    "load_budget_config",
]
