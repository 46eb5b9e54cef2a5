"""Shared settings and logging for the workbench."""

from .configuration import PROJECT_ROOT, Settings, get_settings, settings
from .logger_config import logger

__all__ = ["PROJECT_ROOT", "Settings", "get_settings", "settings", "logger"]
