"""RIS phase-shift optimizers: SDR joint optimization and alternating optimization."""

from ris_selection.optimization.sdr import (
    SdrSettings, build_cost_matrix, covariance_draws_eig, default_rank,
    jo_pipeline, randomize_extract, solve_diag_sdp,
)
from ris_selection.optimization.ao import (
    AoSettings, ao_init, ao_iterate, fallback_init, phase_update,
)

__all__ = [
    "SdrSettings", "build_cost_matrix", "covariance_draws_eig", "default_rank",
    "jo_pipeline", "randomize_extract", "solve_diag_sdp",
    "AoSettings", "ao_init", "ao_iterate", "fallback_init", "phase_update",
]
