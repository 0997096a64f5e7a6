"""Joint optimization of RIS phases by semidefinite relaxation.

The single-user problem max_q ||q^T chi + d^T||^2 over unit-modulus q is
homogenized into max v^H C v with |v_i| = 1, relaxed to

    max Tr(C V)  s.t.  V >= 0, diag(V) = 1,

and solved with a low-rank factorization V = Y Y^H by exact block
coordinate ascent over the rows of Y. Feasible phases are recovered by
Gaussian randomization with covariance V.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ris_selection.beamforming.effective import effective_channel
from ris_selection.beamforming.precoding import mrt, rate_bpshz
from ris_selection.errors import DimensionError, NumericalError
from ris_selection.models.beam import PhaseConfig
from ris_selection.models.optimization import CostMatrix, JoOutcome, SdpFactor, SdpSolution
from ris_selection.models.system import ChannelRealization, SystemConfig
from ris_selection.numerics.linalg import (
    check_hermitian, hermitian_eig, require_length, require_shape,
)
from ris_selection.numerics.random import RngStream, complex_gaussian_matrix

logger = logging.getLogger(__name__)

PSD_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SdrSettings:
    """Solver and randomization settings."""
    rank: Optional[int] = None      # None: ceil(sqrt(2n)) + 1
    max_sweeps: int = 500
    tolerance: float = 1e-8         # relative objective improvement per sweep
    samples: int = 1000             # Gaussian randomization draws

    @classmethod
    def from_config(cls, cfg: SystemConfig) -> "SdrSettings":
        return cls(rank=cfg.sdr_rank, max_sweeps=cfg.sdr_max_sweeps,
                   tolerance=cfg.sdr_tolerance, samples=cfg.sdr_samples)


def default_rank(n: int) -> int:
    return math.ceil(math.sqrt(2 * n)) + 1


def build_cost_matrix(g_k, F, d_k) -> CostMatrix:
    """C = B B^H with B = [diag(g_k) F; d_k^T], of size (M+1) x (M+1).

    For v = conj([q; 1]) the quadratic form v^H C v equals
    ||q^T diag(g_k) F + d_k^T||^2.
    """
    F = require_shape(F, (None, None), "F")
    M, n_bs = F.shape
    g_k = require_length(g_k, M, "g_k")
    d_k = require_length(d_k, n_bs, "d_k")
    chi = g_k[:, None] * F
    B = np.vstack([chi, d_k[None, :]])
    C = B @ B.conj().T
    # exact Hermitian symmetry and a real diagonal
    C = 0.5 * (C + C.conj().T)
    return CostMatrix(C)


def solve_diag_sdp(cost: CostMatrix, settings: SdrSettings = SdrSettings(),
                   rng: Optional[RngStream] = None) -> SdpSolution:
    """Maximize Tr(C V) over V >= 0 with unit diagonal.

    Row i of the factor is replaced by the normalized sum
    sum_{j != i} C[i, j] y_j, which maximizes the objective over that row
    with the others fixed, so the objective never decreases between sweeps.

    Raises:
        NumericalError: C is not Hermitian or not PSD within tolerance.
    """
    C = check_hermitian(cost.C)
    n = C.shape[0]
    rng = rng or RngStream(seed=0)
    rank = settings.rank or default_rank(n)

    scale = float(np.max(np.abs(C)))
    Cn = C / scale if scale > 0 else C
    try:
        np.linalg.cholesky(Cn + PSD_TOLERANCE * np.eye(n))
    except np.linalg.LinAlgError:
        raise NumericalError("cost matrix is not positive semidefinite") from None

    Y = complex_gaussian_matrix((n, rank), rng)
    Y /= np.linalg.norm(Y, axis=1, keepdims=True)

    def objective() -> float:
        return float(np.real(np.vdot(Y, Cn @ Y)))

    prev = objective()
    trace = []
    converged = False
    sweeps = 0
    while sweeps < settings.max_sweeps:
        sweeps += 1
        for i in range(n):
            grad = Cn[i] @ Y - Cn[i, i] * Y[i]
            norm = np.linalg.norm(grad)
            if norm > 0.0:
                Y[i] = grad / norm
        current = objective()
        trace.append(current * scale if scale > 0 else current)
        if current - prev <= settings.tolerance * max(abs(current), np.finfo(float).tiny):
            converged = True
            prev = current
            break
        prev = current

    if not converged:
        logger.warning("SDP coordinate ascent stopped after %d sweeps without converging (n=%d)",
                       sweeps, n)
    value = prev * scale if scale > 0 else prev
    return SdpSolution(factor=SdpFactor(Y), objective=value, sweeps=sweeps,
                       converged=converged, trace=trace)


def randomize_extract(factor: SdpFactor, g_k, F, d_k, n_samples: int,
                      rng: RngStream) -> PhaseConfig:
    """Gaussian randomization: best unit-modulus phases drawn around V = Y Y^H.

    Each draw v = Y r with r ~ CN(0, I_rank) has covariance V. The candidate
    reflection vector is q = conj(v_{1:M} / v_{M+1}); draws with
    v_{M+1} = 0 are discarded. Returns the candidate with the largest
    ||g^T Theta F + d^T||^2.
    """
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1, got {n_samples}")
    F = require_shape(F, (None, None), "F")
    M, n_bs = F.shape
    g_k = require_length(g_k, M, "g_k")
    d_k = require_length(d_k, n_bs, "d_k")
    Y = np.asarray(factor.Y, dtype=np.complex128)
    if Y.shape[0] != M + 1:
        raise DimensionError(f"factor has {Y.shape[0]} rows, expected {M + 1}")

    draws = Y @ complex_gaussian_matrix((Y.shape[1], n_samples), rng)
    last = draws[-1]
    keep = np.abs(last) > 0.0
    if not np.any(keep):
        raise NumericalError("every randomization draw had a zero homogenizing entry")

    theta = -np.angle(draws[:M, keep] / last[keep])          # (M, draws)
    reflected = (np.exp(1j * theta) * g_k[:, None]).T @ F     # (draws, N_b)
    gains = np.sum(np.abs(reflected + d_k) ** 2, axis=1)
    best = int(np.argmax(gains))
    return PhaseConfig.from_angles(theta[:, best])


def covariance_draws_eig(V, n_samples: int, rng: RngStream) -> np.ndarray:
    """Draws U Sigma^{1/2} r with V = U Sigma U^H, one column per draw.

    Distributionally identical to ``Y @ r`` for V = Y Y^H; kept as a
    cross-check of the factor-based sampler.
    """
    eigenvalues, U = hermitian_eig(V)
    root = np.sqrt(np.clip(eigenvalues, 0.0, None))
    r = complex_gaussian_matrix((U.shape[0], n_samples), rng)
    return U @ (root[:, None] * r)


def jo_pipeline(realization: ChannelRealization, k_star: int, tx_power_w: float,
                settings: SdrSettings = SdrSettings(),
                rng: Optional[RngStream] = None) -> JoOutcome:
    """Cost matrix, SDP, randomization, then MRT and rate for user ``k_star``."""
    rng = rng or RngStream(seed=0)
    g_k, d_k = realization.link(k_star)
    cost = build_cost_matrix(g_k, realization.F, d_k)
    solution = solve_diag_sdp(cost, settings, rng)
    phases = randomize_extract(solution.factor, g_k, realization.F, d_k, settings.samples, rng)
    h = effective_channel(g_k, phases, realization.F, d_k)
    w = mrt(h)
    gain = float(np.abs(h @ w.w) ** 2)
    rate = rate_bpshz(gain, tx_power_w, realization.noise_power)
    return JoOutcome(phases=phases, beamformer=w, gain=gain, rate=rate,
                     sdp_objective=solution.objective, converged=solution.converged)
