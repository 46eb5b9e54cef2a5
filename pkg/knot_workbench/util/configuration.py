"""
Configuration Module for the Knot Projection Workbench

This module provides the process-wide settings of the workbench: where logs, budgets and
reports live, and the isotopy policy the auditor uses.
"""

import os
from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings

# Absolute path to the package directory
PROJECT_ROOT = Path(__file__).parent.parent


class Settings(BaseSettings):
    """
    Configuration settings for the knot projection workbench.
    """

    # Logging
    KP_LOG_LEVEL: str = Field(default="INFO")
    KP_LOG_DIR: str = Field(default="logs")

    # Budgets and reports
    KP_BUDGET_FILE: str = Field(default=str(PROJECT_ROOT / "config" / "budgets.yaml"))
    KP_OUTPUT_DIR: str = Field(default="reports")

    # Auditor policy: compare curves up to reflection of the sphere as well
    KP_ALLOW_REFLECTION: bool = Field(default=True)

    # Seed for randomized reduction orders and sampled move sequences
    KP_RANDOM_SEED: int = Field(default=20170401)

    class Config:
        """
        Configuration for the settings class.
        """
        env_file = f".env.{os.getenv('ENVIRONMENT', 'development')}"
        env_file_encoding = "utf-8"
        case_sensitive = True


@lru_cache
def get_settings() -> Settings:
    """
    Creates settings instance and caches it.
    Using lru_cache to avoid reading the environment variables on every call.
    """
    return Settings()


# Initialize settings immediately when module is imported
settings = get_settings()
