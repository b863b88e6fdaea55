# config/config.py

import logging
import os
from pathlib import Path

_LOGGER = logging.getLogger(__name__)

# Choose environment: "local" or "host"
# You can change this manually, or override with an environment variable
ENVIRONMENT = os.getenv("APP_ENV", "local")


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        _LOGGER.warning("ignoring %s=%r: not an integer, using %d", name, raw, default)
        return default
    if value < 0:
        _LOGGER.warning("ignoring %s=%r: must be non-negative, using %d", name, raw, default)
        return default
    return value


# Witness prefix length (number of chain segments checked)
DEFAULT_STEPS = _int_setting("BINCHAIN_STEPS", 8)

# Largest witness term (in nodes) that is actually built and rewritten.
# Heights beyond it are still reported exactly.
MAX_TERM_SIZE = _int_setting("BINCHAIN_MAX_TERM_SIZE", 1_000_000)

# Successor budget for breadth-first exploration
EXPLORE_BUDGET = _int_setting("BINCHAIN_EXPLORE_BUDGET", 64)

# Dashboard: reload interval when watching a program file on disk
REFRESH_INTERVAL_SECONDS = _int_setting("BINCHAIN_REFRESH_SECONDS", 30)

SAMPLE_PROGRAM_DIR = Path(__file__).resolve().parent.parent / "programs"

if ENVIRONMENT == "local":
    DEBUG_MODE = True
    LOG_LEVEL = os.getenv("BINCHAIN_LOG_LEVEL", "INFO")
else:
    DEBUG_MODE = False
    LOG_LEVEL = os.getenv("BINCHAIN_LOG_LEVEL", "WARNING")
