import logging
import os
import platform
from functools import cache

logger = logging.getLogger(__name__)


@cache
def get_platform() -> str:
    return platform.platform(terse=True)


@cache
def get_python_version() -> str:
    return platform.python_version()


def get_thread_count(seed_count: int) -> int:
    """Concurrent seed pipelines allowed by `LINDEC_THREADS` (0 or unset = one per CPU), never more than seeds."""
    raw = os.getenv("LINDEC_THREADS", "0").strip() or "0"
    try:
        requested = int(raw)
    except ValueError:
        logger.warning("Ignoring non-integer LINDEC_THREADS=%r", raw)
        requested = 0
    if requested <= 0:
        requested = os.cpu_count() or 1
    return max(1, min(requested, seed_count))
