"""Nakagami-m small-scale fading."""

from typing import Optional, Tuple, Union

import numpy as np
from scipy.special import gammainc, gammaln

from ris_selection.numerics.random import RngStream


def _check_params(m: float, omega) -> None:
    if not m > 0:
        raise ValueError(f"Nakagami shape m must be positive, got {m}")
    if np.any(np.asarray(omega) <= 0):
        raise ValueError("Nakagami spread omega must be positive")


def nakagami_pdf(x, m: float, omega: float):
    """Density 2 m^m x^(2m-1) exp(-m x^2 / omega) / (Gamma(m) omega^m) for x >= 0."""
    _check_params(m, omega)
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    xp = x[pos]
    log_pdf = (np.log(2.0) + m * np.log(m) - gammaln(m) - m * np.log(omega)
               + (2 * m - 1) * np.log(xp) - m * xp ** 2 / omega)
    out[pos] = np.exp(log_pdf)
    return out


def nakagami_cdf(x, m: float, omega: float):
    """Distribution function: regularized lower incomplete gamma P(m, m x^2 / omega)."""
    _check_params(m, omega)
    x = np.maximum(np.asarray(x, dtype=float), 0.0)
    return gammainc(m, m * x ** 2 / omega)


def sample_nakagami(m: float, omega, rng: RngStream,
                    size: Optional[Union[int, Tuple[int, ...]]] = None):
    """Draw Nakagami-m magnitudes with mean-square ``omega``.

    Uses X = sqrt(G) with G ~ Gamma(shape=m, scale=omega/m), which is exact.
    Returns a float when ``size`` is None and ``omega`` is scalar.
    """
    _check_params(m, omega)
    omega = np.asarray(omega, dtype=float)
    if size is None:
        size = omega.shape or None
    power = rng.generator.gamma(shape=m, scale=omega / m, size=size)
    # keep magnitudes strictly positive
    mag = np.sqrt(np.maximum(power, np.finfo(float).tiny))
    return float(mag) if np.ndim(mag) == 0 else mag


def nakagami_coefficients(m: float, omega, rng: RngStream) -> np.ndarray:
    """Complex coefficients with Nakagami-m magnitude and uniform phase.

    ``omega`` is broadcast to the output shape; magnitudes are drawn first,
    then phases, so the stream order is fixed for a given shape.
    """
    omega = np.asarray(omega, dtype=float)
    mag = np.asarray(sample_nakagami(m, omega, rng, size=omega.shape))
    phase = rng.generator.uniform(0.0, 2.0 * np.pi, size=omega.shape)
    return mag * np.exp(1j * phase)
