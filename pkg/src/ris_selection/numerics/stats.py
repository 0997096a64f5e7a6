"""Empirical distribution helpers."""

from typing import Callable, List, Sequence, Tuple

import numpy as np


def empirical_cdf(samples: Sequence[float]) -> List[Tuple[float, float]]:
    """Step CDF of ``samples`` as (value, probability) pairs.

    Values are sorted ascending and the i-th pair (1-based) carries
    probability i / n, so the last probability is exactly 1.
    """
    values = np.sort(np.asarray(samples, dtype=float).ravel(), kind="stable")
    n = values.shape[0]
    if n == 0:
        raise ValueError("empirical CDF needs at least one sample")
    probs = np.arange(1, n + 1, dtype=float) / n
    return [(float(v), float(p)) for v, p in zip(values, probs)]


def ks_distance(samples: Sequence[float], cdf: Callable[[np.ndarray], np.ndarray]) -> float:
    """Kolmogorov-Smirnov distance between the sample CDF and ``cdf``."""
    values = np.sort(np.asarray(samples, dtype=float).ravel())
    n = values.shape[0]
    if n == 0:
        raise ValueError("KS distance needs at least one sample")
    model = np.asarray(cdf(values), dtype=float)
    upper = np.arange(1, n + 1) / n - model
    lower = model - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))
