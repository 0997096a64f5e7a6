"""Monte-Carlo driver over independent channel realizations."""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from ris_selection import config
from ris_selection.channel.generator import ChannelGenerator
from ris_selection.models.results import ResultSet, TrialResult
from ris_selection.models.system import SchemeId, SystemConfig
from ris_selection.schemes.runner import SchemeRunner, SchemeStreams

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int], None]


def run_trial(cfg: SystemConfig, trial: int,
              schemes: Optional[Iterable[SchemeId]] = None) -> TrialResult:
    """Draw trial ``trial``'s topology and channels and run every scheme on them."""
    schemes = tuple(schemes or cfg.schemes)
    _, realization = ChannelGenerator(cfg).draw(trial)
    runner = SchemeRunner(cfg)
    streams = SchemeStreams.for_trial(cfg.seed, trial)
    result = TrialResult(trial=trial)
    # sequential within a trial so timings are not skewed by each other
    for scheme in schemes:
        result.results[scheme] = runner.run(scheme, realization, streams)
    return result


def run_montecarlo(cfg: SystemConfig, schemes: Optional[Iterable[SchemeId]] = None,
                   threads: Optional[int] = None,
                   progress_callback: Optional[ProgressCallback] = None) -> ResultSet:
    """Run ``cfg.trials`` trials of every enabled scheme.

    Trials run on a thread pool, each with its own random streams, and are
    returned ordered by trial index, so the output is identical for a
    fixed seed regardless of thread count or completion order.

    Args:
        cfg: Validated scenario.
        schemes: Schemes to run; defaults to ``cfg.schemes``.
        threads: Worker threads; defaults to ``config.DEFAULT_THREADS``.
        progress_callback: Called as ``(completed, total)`` after each trial.
    """
    if schemes is not None:
        # re-validates, e.g. the full-scale JO gate
        cfg = cfg.with_overrides({"schemes": tuple(schemes)})
    enabled = tuple(cfg.schemes)
    threads = max(1, threads or config.DEFAULT_THREADS)
    total = cfg.trials
    logger.info("running %d trials of %s on %d thread(s)", total,
                ", ".join(s.label for s in enabled), threads)

    done: List[TrialResult] = []
    if threads == 1:
        for t in range(total):
            done.append(run_trial(cfg, t, enabled))
            if progress_callback:
                progress_callback(t + 1, total)
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            futures = {executor.submit(run_trial, cfg, t, enabled): t for t in range(total)}
            for i, future in enumerate(as_completed(futures), 1):
                try:
                    done.append(future.result())
                except Exception:
                    logger.error("trial %d failed", futures[future])
                    executor.shutdown(wait=False, cancel_futures=True)
                    raise
                if progress_callback:
                    progress_callback(i, total)

    done.sort(key=lambda r: r.trial)
    return ResultSet(config=cfg, schemes=enabled, trials=done)


def summarize_cdf(results: ResultSet) -> Dict[SchemeId, List[Tuple[float, float]]]:
    """Empirical CDF of sum throughput per scheme."""
    if results.trial_count == 0:
        raise ValueError("result set is empty")
    return {scheme: results.cdf(scheme) for scheme in results.schemes}
