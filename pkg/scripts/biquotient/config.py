"""Engine configuration, loaded from the environment with sensible defaults."""

import os
from pathlib import Path

from dotenv import load_dotenv

# Walk up to find the .env closest to the project root
_project_root = Path(__file__).resolve().parent.parent.parent
load_dotenv(_project_root / ".env")

# ── Degree cutoffs ──────────────────────────────────────────────────────────
# Default cutoff is min(dim G/K + DEGREE_MARGIN, DEGREE_CAP)
DEGREE_CAP = int(os.getenv("BIQUOTIENT_DEGREE_CAP", "24"))
DEGREE_MARGIN = int(os.getenv("BIQUOTIENT_DEGREE_MARGIN", "4"))
ALL_SMALL_DEGREE = int(os.getenv("BIQUOTIENT_ALL_SMALL_DEGREE", "16"))
# Cutoff for presentation and model files when --max-degree is not given
FILE_DEGREE = int(os.getenv("BIQUOTIENT_FILE_DEGREE", "12"))
ORACLE_DEGREE = int(os.getenv("BIQUOTIENT_ORACLE_DEGREE", "24"))

# ── Case bounds ────────────────────────────────────────────────────────────
# Grassmann builders refuse blocks with n + k above this
MAX_BLOCK_SUM = int(os.getenv("BIQUOTIENT_MAX_BLOCK_SUM", "4"))
SMALL_RANKS = (1, 2)

# ── Batch execution ────────────────────────────────────────────────────────
WORKERS = int(os.getenv("BIQUOTIENT_WORKERS", "1"))
# Entries kept per memoized slice, restriction and table cache
CACHE_SIZE = int(os.getenv("BIQUOTIENT_CACHE_SIZE", "4096"))
LOG_LEVEL = os.getenv("BIQUOTIENT_LOG_LEVEL", "INFO")

# ── Paths ───────────────────────────────────────────────────────────────────
PROJECT_ROOT = _project_root
FIXTURES_DIR = _project_root / "tests" / "fixtures"

# ── Engine metadata ────────────────────────────────────────────────────────
ENGINE_VERSION = "1.0.0"

# ── Catalog used by the universal-bundle oracle in batch runs ──────────────
ORACLE_GROUPS = [
    "SO(2)", "SO(3)", "SO(4)", "SO(5)", "SO(6)", "SO(7)", "SO(8)",
    "Spin(7)", "U(1)", "U(2)", "U(3)", "U(4)", "SU(2)", "SU(3)",
    "Sp(1)", "Sp(2)", "Sp(3)", "T(2)", "SO(2)xSO(3)",
]

# ── Versatility block cases run by --all-small ─────────────────────────────
VERSATILITY_CASES = [
    "Sp(1)xSp(1)<Sp(2)", "U(1)xU(1)<U(2)", "U(1)xU(2)<U(3)", "U(2)<Sp(2)",
    "SU(3)xSU(3)<SU(6)", "U(2)<U(4)>Sp(2)",
]

# ── Equal-rank pairs for the isotropy formality check ──────────────────────
FORMALITY_PAIRS = [
    ("SO(3)", "SO(2)"), ("Sp(2)", "U(2)"), ("U(3)", "U(1)xU(2)"), ("SO(5)", "SO(2)xSO(3)"),
]


def default_cutoff(dimension: int) -> int:
    """Cutoff covering every Betti number of a space of the given dimension."""
    return min(dimension + DEGREE_MARGIN, DEGREE_CAP)
