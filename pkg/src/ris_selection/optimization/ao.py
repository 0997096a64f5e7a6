"""Alternating optimization of RIS phases and the MRT beamformer."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ris_selection.beamforming.effective import effective_channel
from ris_selection.beamforming.precoding import mrt, rate_bpshz
from ris_selection.errors import NumericalError
from ris_selection.models.beam import Beamformer, PhaseConfig
from ris_selection.models.optimization import AoOutcome, AoState, AoStep
from ris_selection.models.system import ChannelRealization, SystemConfig
from ris_selection.numerics.linalg import require_length, require_shape

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AoSettings:
    iterations: int = 3
    tolerance: Optional[float] = None   # optional relative-improvement stop

    @classmethod
    def from_config(cls, cfg: SystemConfig) -> "AoSettings":
        return cls(iterations=cfg.ao_iterations, tolerance=cfg.ao_tolerance)


def ao_init(d_k) -> Beamformer:
    """MRT on the direct link, w0 = conj(d) / ||d||."""
    d_k = require_length(d_k, None, "d_k")
    if not np.any(d_k):
        raise NumericalError("direct link is blocked (d = 0); MRT initialization undefined")
    return mrt(d_k)


def fallback_init(g_k, F) -> Beamformer:
    """Initializer for a blocked direct link: MRT on g^T F with all phases at zero.

    Falls back to the first antenna if the reflected channel vanishes too.
    """
    F = require_shape(F, (None, None), "F")
    g_k = require_length(g_k, F.shape[0], "g_k")
    reflected = g_k @ F
    if np.any(reflected):
        return mrt(reflected)
    w = np.zeros(F.shape[1], dtype=np.complex128)
    w[0] = 1.0
    return Beamformer(w)


def phase_update(g_k, F, w: Beamformer, d_k) -> PhaseConfig:
    """Closed-form phases aligning every reflected path with the direct path.

    theta_n = phi_0 - arg(g_n) - arg(f_n^T w) with phi_0 = arg(d^T w), after
    which |(g^T Theta F + d^T) w| = sum_n |g_n f_n^T w| + |d^T w|. Elements
    with a zero cascaded coefficient get phase 0; phi_0 is 0 when d^T w = 0.
    """
    F = require_shape(F, (None, len(w)), "F")
    M = F.shape[0]
    g_k = require_length(g_k, M, "g_k")
    d_k = require_length(d_k, len(w), "d_k")
    direct = complex(d_k @ w.w)
    phi0 = float(np.angle(direct)) if direct != 0 else 0.0
    cascade = g_k * (F @ w.w)
    theta = np.where(cascade != 0, phi0 - np.angle(cascade), 0.0)
    return PhaseConfig.from_angles(theta)


def _objective(g_k, phases: PhaseConfig, F, d_k, w: Beamformer) -> float:
    return float(np.abs(effective_channel(g_k, phases, F, d_k) @ w.w) ** 2)


def ao_iterate(realization: ChannelRealization, k_star: int, iterations: int,
               tx_power_w: float, tolerance: Optional[float] = None) -> AoOutcome:
    """Alternate phase_update and MRT for user ``k_star``.

    Runs exactly ``iterations`` rounds unless ``tolerance`` is given, in which
    case it stops early once a round improves the objective by less than
    that relative amount. The trace records the objective after every
    half-step and never decreases.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    F = realization.F
    g_k, d_k = realization.link(k_star)

    flagged = False
    try:
        w = ao_init(d_k)
    except NumericalError:
        logger.warning("user %d has a blocked direct link; using reflected-path initialization", k_star)
        w = fallback_init(g_k, F)
        flagged = True

    phases = PhaseConfig.zeros(realization.n_elements)
    trace = [AoState(0, AoStep.INIT, w, phases, _objective(g_k, phases, F, d_k, w))]

    for i in range(1, iterations + 1):
        phases = phase_update(g_k, F, w, d_k)
        trace.append(AoState(i, AoStep.PHASE, w, phases, _objective(g_k, phases, F, d_k, w)))

        h = effective_channel(g_k, phases, F, d_k)
        if np.any(h):
            w = mrt(h)
        trace.append(AoState(i, AoStep.BEAM, w, phases, _objective(g_k, phases, F, d_k, w)))

        if tolerance is not None and i > 1:
            before = trace[-3].objective
            after = trace[-1].objective
            if after - before <= tolerance * max(after, np.finfo(float).tiny):
                logger.debug("AO stopped after %d iterations (relative gain below %g)", i, tolerance)
                break

    h = effective_channel(g_k, phases, F, d_k)
    gain = float(np.real(np.vdot(h, h)))
    rate = rate_bpshz(gain, tx_power_w, realization.noise_power)
    return AoOutcome(phases=phases, beamformer=w, gain=gain, rate=rate,
                     trace=trace, flagged=flagged)
