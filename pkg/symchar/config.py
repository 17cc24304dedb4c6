"""
Configuration settings for the symchar character engine.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Logging
DEBUG = os.getenv("SYMCHAR_DEBUG", "false").lower() == "true"

# Structural bound on n; character values themselves are unbounded ints
MAX_PARTITION_SIZE = 10**6

# Table / scan feasibility bound (p(14) = 135 rows)
TABLE_MAX_N = int(os.getenv("SYMCHAR_TABLE_MAX_N", "14"))

# Murnaghan-Nakayama memo cache
MEMO_MAX_ENTRIES = int(os.getenv("SYMCHAR_MEMO_MAX_ENTRIES", "0"))  # 0 = unbounded
MEMO_PATH = os.getenv("SYMCHAR_MEMO_PATH", None)
MEMO_FILE_HEADER = "symchar-memo v1"

# Certifier settings
CERTIFIER_SETTINGS = {
    # largest |gamma| certified p-vanishing by exhaustive search
    "vanishing_brute_force_max": int(os.getenv("SYMCHAR_VANISHING_BRUTE_FORCE_MAX", "12")),
    # cap on the split index s in the removal-process rule
    "process_max_split": int(os.getenv("SYMCHAR_PROCESS_MAX_SPLIT", "3")),
}

# Process exit codes
EXIT_CODES = {
    "ok": 0,
    "usage": 2,
    "consistency": 3,
}
