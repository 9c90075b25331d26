import os
import logging
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file
ROOT_DIR = Path(__file__).parent
load_dotenv(ROOT_DIR / '.env')

logger = logging.getLogger(__name__)

# Load environment variables with fallbacks
NEIGHBORLY_THREADS = int(os.environ.get('NEIGHBORLY_THREADS', str(os.cpu_count() or 1)))
NEIGHBORLY_MAX_CASES = int(os.environ.get('NEIGHBORLY_MAX_CASES', '0'))
NEIGHBORLY_MAX_SECONDS = float(os.environ.get('NEIGHBORLY_MAX_SECONDS', '0'))
NEIGHBORLY_PARTITION_CAP = int(os.environ.get('NEIGHBORLY_PARTITION_CAP', '200000'))
NEIGHBORLY_LOG_LEVEL = os.environ.get('NEIGHBORLY_LOG_LEVEL', 'INFO')

SCHEMA_VERSION = "v1"


def worker_count(requested: Optional[int] = None) -> int:
    """Clamp a requested worker count to [1, NEIGHBORLY_THREADS]."""
    ceiling = max(1, NEIGHBORLY_THREADS)
    if requested is None:
        return 1
    if requested > ceiling:
        logger.info(f"Capping workers at {ceiling} (requested {requested})")
    return max(1, min(requested, ceiling))


def case_budget(requested: Optional[int] = None) -> Optional[int]:
    """Case budget for sweeps; None means unlimited."""
    value = NEIGHBORLY_MAX_CASES if requested is None else requested
    return value if value and value > 0 else None


def time_budget(requested: Optional[float] = None) -> Optional[float]:
    """Wall-clock budget in seconds for sweeps; None means unlimited."""
    value = NEIGHBORLY_MAX_SECONDS if requested is None else requested
    return value if value and value > 0 else None
