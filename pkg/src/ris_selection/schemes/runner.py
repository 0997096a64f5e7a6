"""US-JO, US-AO, US-Ideal, TDMA and FDMA on a single channel realization.

All schemes of a trial consume the same ChannelRealization. Wall time
covers user selection, phase optimization and the rate computation only.
"""

import logging
import time
from dataclasses import dataclass

import numpy as np

from ris_selection.beamforming.effective import effective_channel, select_user, user_gamma_max
from ris_selection.beamforming.precoding import rate_bpshz
from ris_selection.models.results import SchemeResult
from ris_selection.models.system import ChannelRealization, FdmaAnchor, SchemeId, SystemConfig
from ris_selection.numerics.random import RngStream, StreamPurpose
from ris_selection.optimization.ao import AoSettings, ao_iterate
from ris_selection.optimization.sdr import SdrSettings, jo_pipeline

logger = logging.getLogger(__name__)


@dataclass
class SchemeStreams:
    """Random streams owned by one trial's randomized schemes."""
    jo: RngStream
    fdma: RngStream

    @classmethod
    def for_trial(cls, seed: int, trial: int) -> "SchemeStreams":
        return cls(
            jo=RngStream.for_trial(seed, trial, StreamPurpose.JO),
            fdma=RngStream.for_trial(seed, trial, StreamPurpose.FDMA),
        )


class SchemeRunner:
    """Evaluate transmission schemes under one SystemConfig."""

    def __init__(self, cfg: SystemConfig):
        self.cfg = cfg
        self.ao = AoSettings.from_config(cfg)
        self.sdr = SdrSettings.from_config(cfg)

    def run(self, scheme: SchemeId, realization: ChannelRealization,
            streams: SchemeStreams) -> SchemeResult:
        """Dispatch to the scheme's evaluator."""
        if scheme == SchemeId.US_IDEAL:
            return self.run_us_ideal(realization)
        if scheme == SchemeId.US_JO:
            return self.run_us_jo(realization, streams.jo)
        if scheme == SchemeId.US_AO:
            return self.run_us_ao(realization)
        if scheme == SchemeId.TDMA:
            return self.run_tdma(realization)
        if scheme == SchemeId.FDMA:
            return self.run_fdma(realization, streams.fdma)
        raise ValueError(f"Unknown scheme: {scheme}")

    def run_us_ideal(self, realization: ChannelRealization) -> SchemeResult:
        """Best user at the unattainable per-antenna-aligned gain."""
        start = time.perf_counter()
        gammas = user_gamma_max(realization)
        k_star = int(np.argmax(gammas))
        rate = rate_bpshz(float(gammas[k_star]), self.cfg.tx_power_w, realization.noise_power)
        elapsed = time.perf_counter() - start
        return SchemeResult(SchemeId.US_IDEAL, self.cfg.bandwidth_hz * rate,
                            selected_user=k_star, wall_time_s=elapsed)

    def run_us_jo(self, realization: ChannelRealization, rng: RngStream) -> SchemeResult:
        """Best user, phases from SDR with Gaussian randomization."""
        start = time.perf_counter()
        k_star = select_user(realization)
        outcome = jo_pipeline(realization, k_star, self.cfg.tx_power_w, self.sdr, rng)
        elapsed = time.perf_counter() - start
        return SchemeResult(SchemeId.US_JO, self.cfg.bandwidth_hz * outcome.rate,
                            selected_user=k_star, wall_time_s=elapsed,
                            converged=outcome.converged)

    def run_us_ao(self, realization: ChannelRealization) -> SchemeResult:
        """Best user, phases from alternating optimization."""
        start = time.perf_counter()
        k_star = select_user(realization)
        outcome = ao_iterate(realization, k_star, self.ao.iterations,
                             self.cfg.tx_power_w, self.ao.tolerance)
        elapsed = time.perf_counter() - start
        return SchemeResult(SchemeId.US_AO, self.cfg.bandwidth_hz * outcome.rate,
                            selected_user=k_star, wall_time_s=elapsed,
                            converged=not outcome.flagged)

    def run_tdma(self, realization: ChannelRealization) -> SchemeResult:
        """Each user gets a 1/K time slot with full power, bandwidth and its own phases."""
        start = time.perf_counter()
        K = realization.n_users
        total = 0.0
        flagged = False
        for k in range(K):
            outcome = ao_iterate(realization, k, self.ao.iterations,
                                 self.cfg.tx_power_w, self.ao.tolerance)
            total += outcome.rate
            flagged = flagged or outcome.flagged
        throughput = self.cfg.bandwidth_hz / K * total
        elapsed = time.perf_counter() - start
        return SchemeResult(SchemeId.TDMA, throughput, wall_time_s=elapsed,
                            converged=not flagged)

    def fdma_anchor(self, realization: ChannelRealization, rng: RngStream) -> int:
        """User whose AO phases are shared across the whole band."""
        if self.cfg.fdma_anchor == FdmaAnchor.BEST:
            return select_user(realization)
        return int(rng.generator.integers(realization.n_users))

    def run_fdma(self, realization: ChannelRealization, rng: RngStream) -> SchemeResult:
        """One reflection pattern for all sub-bands; each user gets B/K, P/K and noise/K."""
        start = time.perf_counter()
        K = realization.n_users
        anchor = self.fdma_anchor(realization, rng)
        logger.debug("FDMA anchor user %d", anchor)
        outcome = ao_iterate(realization, anchor, self.ao.iterations,
                             self.cfg.tx_power_w, self.ao.tolerance)
        power = self.cfg.tx_power_w / K
        noise = realization.noise_power / K
        total = 0.0
        for k in range(K):
            g_k, d_k = realization.link(k)
            h = effective_channel(g_k, outcome.phases, realization.F, d_k)
            total += rate_bpshz(float(np.real(np.vdot(h, h))), power, noise)
        throughput = self.cfg.bandwidth_hz / K * total
        elapsed = time.perf_counter() - start
        return SchemeResult(SchemeId.FDMA, throughput, wall_time_s=elapsed,
                            converged=not outcome.flagged)
