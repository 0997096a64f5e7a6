"""Effective channels, MRT precoding, capacity and opportunistic user selection."""

from ris_selection.beamforming.effective import (
    effective_channel, gamma_max, select_user, user_gamma_max,
)
from ris_selection.beamforming.precoding import mrt, rate_bpshz

__all__ = [
    "effective_channel", "gamma_max", "select_user", "user_gamma_max",
    "mrt", "rate_bpshz",
]
