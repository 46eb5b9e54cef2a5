"""
Logger Configuration Module

Sets up the `knot_workbench` logger shared by every module: console output plus a rotating
log file, both with the same line format.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from .configuration import settings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Create logs directory if it doesn't exist
log_dir = Path(settings.KP_LOG_DIR)
log_dir.mkdir(parents=True, exist_ok=True)

# Configure the logger
logger = logging.getLogger("knot_workbench")
logger.setLevel(getattr(logging, settings.KP_LOG_LEVEL.upper(), logging.INFO))

if not logger.handlers:
    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(console_handler)

    # Configure file handler with rotation
    file_handler = RotatingFileHandler(
        log_dir / "knot_workbench.log",
        maxBytes=10 * 1024 * 1024,  # 10MB
        backupCount=5,
        encoding="utf-8",
    )
    file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(file_handler)
