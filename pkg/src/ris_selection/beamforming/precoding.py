"""Transmit precoding and spectral efficiency."""

import numpy as np

from ris_selection.errors import NumericalError
from ris_selection.models.beam import Beamformer
from ris_selection.numerics.linalg import require_length


def mrt(h) -> Beamformer:
    """Maximal-ratio transmission w = conj(h) / ||h||, so |h^T w| = ||h||."""
    h = require_length(h, None, "h")
    norm = float(np.linalg.norm(h))
    if norm == 0.0:
        raise NumericalError("MRT is undefined for an all-zero channel")
    return Beamformer(np.conj(h) / norm)


def rate_bpshz(channel_gain: float, P_d: float, noise: float) -> float:
    """Spectral efficiency log2(1 + gain * P_d / noise) in bit/s/Hz."""
    if noise <= 0:
        raise ValueError(f"noise power must be positive, got {noise}")
    if channel_gain < 0:
        raise ValueError(f"channel gain must be non-negative, got {channel_gain}")
    return float(np.log2(1.0 + channel_gain * P_d / noise))
