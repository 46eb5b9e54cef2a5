"""
Budget Configuration Module

Loads the search and state-sum budgets from `budgets.yaml`. Environment variables take
precedence over file values; a missing or unreadable file falls back to the defaults.
"""

import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from ..util.configuration import settings
from ..util.logger_config import logger


@dataclass
class SearchBudget:
    """Caps for one witness search."""

    extra_crossings: int = 4
    node_cap: int = 5_000_000
    time_cap: float = 60.0
    # Absolute crossing cap; None means max(c(P), c(Q)) + extra_crossings
    c_max: int | None = None

    def __post_init__(self):
        if self.extra_crossings < 0:
            raise ValueError(f"extra_crossings must be >= 0, got {self.extra_crossings}")
        if self.node_cap <= 0:
            raise ValueError(f"node_cap must be positive, got {self.node_cap}")
        if self.time_cap < 0:
            raise ValueError(f"time_cap must be >= 0, got {self.time_cap}")
        if self.c_max is not None and self.c_max < 0:
            raise ValueError(f"c_max must be >= 0, got {self.c_max}")

    def crossing_cap(self, *crossings: int) -> int:
        if self.c_max is not None:
            return self.c_max
        return max(crossings, default=0) + self.extra_crossings


@dataclass
class KnotBudget:
    """State-sum limits of the knot layer."""

    jones_max_crossings: int = 16
    tr_max_crossings: int = 8

    def __post_init__(self):
        if self.jones_max_crossings <= 0 or self.tr_max_crossings <= 0:
            raise ValueError("knot budgets must be positive")


@dataclass
class MacroBudget:
    """Corpus size and per-context cap for macro and contracting audits."""

    corpus_max_crossings: int = 5
    node_cap: int = 200_000

    def __post_init__(self):
        if self.corpus_max_crossings < 0:
            raise ValueError(
                f"corpus_max_crossings must be >= 0, got {self.corpus_max_crossings}"
            )
        if self.node_cap <= 0:
            raise ValueError(f"node_cap must be positive, got {self.node_cap}")


@dataclass
class BudgetConfig:
    """All budgets of one run."""

    search: SearchBudget = field(default_factory=SearchBudget)
    matrix: SearchBudget = field(
        default_factory=lambda: SearchBudget(node_cap=400_000, time_cap=120.0)
    )
    knot: KnotBudget = field(default_factory=KnotBudget)
    macro: MacroBudget = field(default_factory=MacroBudget)
    corpus_max_crossings: int = 7

    def __post_init__(self):
        if self.corpus_max_crossings < 0:
            raise ValueError(
                f"corpus_max_crossings must be >= 0, got {self.corpus_max_crossings}"
            )


def _load_config_file(config_file: Path) -> dict:
    """
    Load budgets from a YAML file.

    Returns:
        dict: Budget dictionary from file, or empty dict if file not found or unreadable
    """
    if not config_file.exists():
        logger.warning(f"Budget file not found: {config_file}. Using defaults.")
        return {}

    try:
        with open(config_file, encoding="utf-8") as f:
            config = yaml.safe_load(f) or {}
        logger.info(f"Loaded budgets from {config_file}")
        return config
    except yaml.YAMLError as e:
        logger.error(f"Error parsing budget file {config_file}: {e}")
        return {}
    except OSError as e:
        logger.error(f"Error loading budget file {config_file}: {e}")
        return {}


def _env_number(key: str, default, cast):
    raw = os.getenv(key)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        logger.warning(f"Invalid value for {key}: {raw}. Using {default}.")
        return default


def _search_budget(section: dict, defaults: SearchBudget) -> SearchBudget:
    return SearchBudget(
        extra_crossings=int(section.get("extra_crossings", defaults.extra_crossings)),
        node_cap=int(section.get("node_cap", defaults.node_cap)),
        time_cap=float(section.get("time_cap", defaults.time_cap)),
        c_max=section.get("c_max", defaults.c_max),
    )


def load_budget_config(path: str | Path | None = None) -> BudgetConfig:
    """
    Build the budget configuration from file and environment.

    Args:
        path: YAML file; defaults to the `KP_BUDGET_FILE` setting

    Returns:
        BudgetConfig: Validated budgets

    Raises:
        ValueError: If a configured cap is out of range
    """
    file_config = _load_config_file(Path(path or settings.KP_BUDGET_FILE))
    defaults = BudgetConfig()

    search = _search_budget(file_config.get("search", {}), defaults.search)
    matrix = _search_budget(file_config.get("matrix", {}), defaults.matrix)

    # Override the main search budget with environment variables (if set)
    search = SearchBudget(
        extra_crossings=_env_number("KP_EXTRA_CROSSINGS", search.extra_crossings, int),
        node_cap=_env_number("KP_NODE_CAP", search.node_cap, int),
        time_cap=_env_number("KP_TIME_CAP", search.time_cap, float),
        c_max=search.c_max,
    )

    knot_section = file_config.get("knot", {})
    knot = KnotBudget(
        jones_max_crossings=int(
            knot_section.get("jones_max_crossings", defaults.knot.jones_max_crossings)
        ),
        tr_max_crossings=int(knot_section.get("tr_max_crossings", defaults.knot.tr_max_crossings)),
    )

    macro_section = file_config.get("macro", {})
    macro = MacroBudget(
        corpus_max_crossings=int(
            macro_section.get("corpus_max_crossings", defaults.macro.corpus_max_crossings)
        ),
        node_cap=int(macro_section.get("node_cap", defaults.macro.node_cap)),
    )

    corpus_section = file_config.get("corpus", {})
    corpus_max = int(
        corpus_section.get("exhaustive_max_crossings", defaults.corpus_max_crossings)
    )

    config = BudgetConfig(
        search=search, matrix=matrix, knot=knot, macro=macro, corpus_max_crossings=corpus_max
    )
    logger.info(
        f"Budgets: search node_cap={search.node_cap}, extra_crossings={search.extra_crossings}, "
        f"matrix node_cap={matrix.node_cap}"
    )
    return config
