"""Monte-Carlo driver, CDF aggregation and result persistence."""

from ris_selection.harness.montecarlo import run_montecarlo, run_trial, summarize_cdf
from ris_selection.harness.persistence import (
    CDF_COLUMNS, TRIAL_COLUMNS, ResultPaths, cdf_frame, cdf_from_trials,
    read_trials, trials_frame, write_cdf, write_manifest, write_results,
)

__all__ = [
    "run_montecarlo", "run_trial", "summarize_cdf",
    "CDF_COLUMNS", "TRIAL_COLUMNS", "ResultPaths", "cdf_frame", "cdf_from_trials",
    "read_trials", "trials_frame", "write_cdf", "write_manifest", "write_results",
]
