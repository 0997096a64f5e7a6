"""Per-scheme results and the aggregated Monte-Carlo result set."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ris_selection.models.system import SchemeId, SystemConfig
from ris_selection.numerics.stats import empirical_cdf


@dataclass
class SchemeResult:
    """Outcome of one scheme on one channel realization."""
    scheme: SchemeId
    sum_throughput_bps: float
    selected_user: Optional[int] = None   # US schemes only
    wall_time_s: float = 0.0
    converged: bool = True

    def __post_init__(self):
        if not self.sum_throughput_bps >= 0.0:
            raise ValueError(f"{self.scheme.label}: negative or NaN throughput")
        if self.wall_time_s < 0.0:
            raise ValueError(f"{self.scheme.label}: negative wall time")


@dataclass
class TrialResult:
    """All scheme results for one Monte-Carlo trial (same realization)."""
    trial: int
    results: Dict[SchemeId, SchemeResult] = field(default_factory=dict)


@dataclass
class ResultSet:
    """Results of a Monte-Carlo run, ordered by trial index."""
    config: SystemConfig
    schemes: Tuple[SchemeId, ...]
    trials: List[TrialResult] = field(default_factory=list)

    def __post_init__(self):
        for t in self.trials:
            missing = [s for s in self.schemes if s not in t.results]
            if missing:
                raise ValueError(f"trial {t.trial} lacks results for {missing[0].label}")

    @property
    def trial_count(self) -> int:
        return len(self.trials)

    def throughputs(self, scheme: SchemeId) -> np.ndarray:
        return np.array([t.results[scheme].sum_throughput_bps for t in self.trials])

    def wall_times_s(self, scheme: SchemeId) -> np.ndarray:
        return np.array([t.results[scheme].wall_time_s for t in self.trials])

    def mean_wall_time_s(self, scheme: SchemeId) -> float:
        times = self.wall_times_s(scheme)
        return float(times.mean()) if times.size else 0.0

    def unconverged(self, scheme: SchemeId) -> int:
        return sum(1 for t in self.trials if not t.results[scheme].converged)

    def cdf(self, scheme: SchemeId) -> List[Tuple[float, float]]:
        return empirical_cdf(self.throughputs(scheme))

    def summary(self) -> List[Dict]:
        """Per-scheme throughput statistics, suitable for tabular display."""
        rows = []
        for scheme in self.schemes:
            tp = self.throughputs(scheme)
            if tp.size == 0:
                continue
            rows.append({
                "scheme": scheme,
                "mean_bps": float(tp.mean()),
                "median_bps": float(np.median(tp)),
                "p10_bps": float(np.percentile(tp, 10)),
                "p90_bps": float(np.percentile(tp, 90)),
                "mean_wall_ms": self.mean_wall_time_s(scheme) * 1e3,
                "unconverged": self.unconverged(scheme),
            })
        return rows
