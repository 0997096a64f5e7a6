"""Composite BS-RIS-user channel and its ideal-alignment bound."""

import numpy as np

from ris_selection.errors import DimensionError
from ris_selection.models.beam import PhaseConfig
from ris_selection.models.system import ChannelRealization
from ris_selection.numerics.linalg import CVector, require_length, require_shape


def effective_channel(g_k, theta: PhaseConfig, F, d_k) -> CVector:
    """h^T = g_k^T Theta F + d_k^T, a length-N_b vector."""
    F = require_shape(F, (None, None), "F")
    M, n_bs = F.shape
    g_k = require_length(g_k, M, "g_k")
    d_k = require_length(d_k, n_bs, "d_k")
    if len(theta) != M:
        raise DimensionError(f"theta has {len(theta)} phases, F has {M} rows")
    return (g_k * theta.phasors) @ F + d_k


def gamma_max(g_k, F, d_k) -> float:
    """Per-antenna perfectly aligned gain sum_n (sum_m |g_m||f_mn| + |d_n|)^2.

    Upper-bounds ||g^T Theta F + d^T||^2 for every Theta; attainable only
    when N_b = 1.
    """
    F = require_shape(F, (None, None), "F")
    M, n_bs = F.shape
    g_k = require_length(g_k, M, "g_k")
    d_k = require_length(d_k, n_bs, "d_k")
    amplitude = np.abs(g_k) @ np.abs(F) + np.abs(d_k)
    return float(np.sum(amplitude ** 2))


def user_gamma_max(realization: ChannelRealization) -> np.ndarray:
    """gamma_max of every user, shape (K,)."""
    amplitude = np.abs(realization.g) @ np.abs(realization.F) + np.abs(realization.d)
    return np.sum(amplitude ** 2, axis=1)


def select_user(realization: ChannelRealization) -> int:
    """Opportunistic user k* = argmax_k gamma_max (0-based; ties go to the lowest index)."""
    return int(np.argmax(user_gamma_max(realization)))
