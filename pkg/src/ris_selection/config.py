"""Process-level defaults loaded from environment variables."""

import os
from pathlib import Path

# Logging
LOG_LEVEL = os.getenv("RIS_LOG_LEVEL", "WARNING").upper()

# Worker threads for trial-level parallelism
DEFAULT_THREADS = int(os.getenv("RIS_THREADS", str(os.cpu_count() or 1)))

# Where `run` writes its CSVs and manifest
DEFAULT_OUTPUT_DIR = Path(os.getenv("RIS_OUTPUT_DIR", "results"))

# Bundled scenario files
CONFIG_DIR = Path(os.getenv(
    "RIS_CONFIG_DIR",
    str(Path(__file__).parent.parent.parent / "config"),
))

# Largest total element count M for which US-JO runs without the
# explicit full-scale flag. The SDR path is cubic-ish in M.
JO_ELEMENT_LIMIT = int(os.getenv("RIS_JO_ELEMENT_LIMIT", "256"))

# Channel coherence windows used to judge per-realization runtimes (seconds)
COHERENCE_WINDOWS_S = (0.010, 0.100)
