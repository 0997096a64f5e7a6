"""Large-scale path loss and noise power."""

import numpy as np

REFERENCE_DISTANCE_M = 1.0


def _check_distance(d) -> np.ndarray:
    d = np.asarray(d, dtype=float)
    if np.any(d < REFERENCE_DISTANCE_M):
        raise ValueError(
            f"distance {float(np.min(d)):.3f} m is below the {REFERENCE_DISTANCE_M:g} m reference distance"
        )
    return d


def umi_pathloss_db(d, f_c: float):
    """3GPP Urban Micro NLOS large-scale gain in dB.

    Args:
        d: Distance(s) in metres, at least 1 m.
        f_c: Carrier frequency in GHz.

    Returns:
        -22.7 - 26 log10(f_c) - 36.7 log10(d), scalar or array like ``d``.
    """
    if f_c <= 0:
        raise ValueError(f"carrier frequency must be positive, got {f_c}")
    d = _check_distance(d)
    out = -22.7 - 26.0 * np.log10(f_c) - 36.7 * np.log10(d)
    return float(out) if out.ndim == 0 else out


def los_pathloss_db(d, alpha: float, L0: float):
    """Line-of-sight gain L0 - 10 alpha log10(d) in dB (L0 at the 1 m reference)."""
    d = _check_distance(d)
    out = L0 - 10.0 * alpha * np.log10(d)
    return float(out) if out.ndim == 0 else out


def noise_power_w(bandwidth: float, density: float, nf: float) -> float:
    """Thermal noise power in watts from a dBm/Hz density, bandwidth and noise figure."""
    if bandwidth <= 0:
        raise ValueError(f"bandwidth must be positive, got {bandwidth}")
    dbm = density + 10.0 * np.log10(bandwidth) + nf
    return float(10.0 ** ((dbm - 30.0) / 10.0))


def db_to_linear(db):
    return np.power(10.0, np.asarray(db, dtype=float) / 10.0)
