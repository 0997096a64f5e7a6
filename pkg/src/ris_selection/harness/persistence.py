"""CSV and manifest files written by a run.

Per-trial rows: ``trial,scheme,sum_throughput_bps,selected_user,wall_time_ms,converged``.
CDF rows: ``scheme,throughput_bps,probability``. Floats are written with
shortest round-trip precision and read back with ``float_precision="round_trip"``
so a stored run reproduces its CDF bit for bit.
"""

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Mapping, Tuple, Union

import pandas as pd

from ris_selection import __version__
from ris_selection.errors import ResultsIOError
from ris_selection.harness.montecarlo import summarize_cdf
from ris_selection.models.results import ResultSet
from ris_selection.models.system import SchemeId
from ris_selection.numerics.stats import empirical_cdf

TRIAL_COLUMNS = ["trial", "scheme", "sum_throughput_bps", "selected_user",
                 "wall_time_ms", "converged"]
CDF_COLUMNS = ["scheme", "throughput_bps", "probability"]

TRIALS_FILE = "trials.csv"
CDF_FILE = "cdf.csv"
MANIFEST_FILE = "manifest.json"


@dataclass
class ResultPaths:
    trials: Path
    cdf: Path
    manifest: Path


def _scheme_key(scheme: Union[SchemeId, str]) -> str:
    return scheme.value if isinstance(scheme, SchemeId) else str(scheme)


def trials_frame(results: ResultSet) -> pd.DataFrame:
    """One row per (trial, scheme), ordered by trial then scheme."""
    rows = []
    for t in results.trials:
        for scheme in results.schemes:
            r = t.results[scheme]
            rows.append({
                "trial": t.trial,
                "scheme": scheme.value,
                "sum_throughput_bps": r.sum_throughput_bps,
                "selected_user": r.selected_user,
                "wall_time_ms": r.wall_time_s * 1e3,
                "converged": r.converged,
            })
    df = pd.DataFrame(rows, columns=TRIAL_COLUMNS)
    df["selected_user"] = df["selected_user"].astype("Int64")
    return df


def cdf_frame(cdfs: Mapping[Union[SchemeId, str], List[Tuple[float, float]]]) -> pd.DataFrame:
    rows = [
        {"scheme": _scheme_key(scheme), "throughput_bps": value, "probability": prob}
        for scheme, pairs in cdfs.items()
        for value, prob in pairs
    ]
    return pd.DataFrame(rows, columns=CDF_COLUMNS)


def _write_csv(df: pd.DataFrame, path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(path, index=False, encoding="utf-8", lineterminator="\n")
    except OSError as e:
        raise ResultsIOError(path, f"cannot write: {e.strerror or e}") from None
    return path


def write_cdf(cdfs: Mapping[Union[SchemeId, str], List[Tuple[float, float]]],
              path: Union[str, Path]) -> Path:
    return _write_csv(cdf_frame(cdfs), Path(path))


def write_manifest(results: ResultSet, path: Union[str, Path]) -> Path:
    """JSON manifest holding the full config; loadable as a scenario file."""
    path = Path(path)
    doc = {
        "config": results.config.to_document(),
        "seed": results.config.seed,
        "schemes": [s.value for s in results.schemes],
        "trials": results.trial_count,
        "version": __version__,
        "created": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise ResultsIOError(path, f"cannot write: {e.strerror or e}") from None
    return path


def write_results(results: ResultSet, out_dir: Union[str, Path]) -> ResultPaths:
    """Write per-trial CSV, per-scheme CDF CSV and the run manifest into ``out_dir``."""
    out_dir = Path(out_dir)
    if out_dir.exists() and not out_dir.is_dir():
        raise ResultsIOError(out_dir, "output path exists and is not a directory")
    trials = _write_csv(trials_frame(results), out_dir / TRIALS_FILE)
    cdf = write_cdf(summarize_cdf(results), out_dir / CDF_FILE)
    manifest = write_manifest(results, out_dir / MANIFEST_FILE)
    return ResultPaths(trials=trials, cdf=cdf, manifest=manifest)


def read_trials(path: Union[str, Path]) -> pd.DataFrame:
    """Load and validate a per-trial CSV written by ``write_results``."""
    path = Path(path)
    try:
        df = pd.read_csv(path, float_precision="round_trip")
    except FileNotFoundError:
        raise ResultsIOError(path, "file not found") from None
    except pd.errors.EmptyDataError:
        raise ResultsIOError(path, "file is empty") from None
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise ResultsIOError(path, f"cannot parse CSV: {e}") from None
    except OSError as e:
        raise ResultsIOError(path, f"cannot read: {e.strerror or e}") from None

    missing = [c for c in TRIAL_COLUMNS if c not in df.columns]
    if missing:
        raise ResultsIOError(path, f"missing column '{missing[0]}'")
    if df.empty:
        raise ResultsIOError(path, "no trial rows")
    tp = pd.to_numeric(df["sum_throughput_bps"], errors="coerce")
    if tp.isna().any() or (tp < 0).any():
        raise ResultsIOError(path, "sum_throughput_bps holds non-numeric or negative values")
    df["sum_throughput_bps"] = tp.astype(float)
    return df


def cdf_from_trials(df: pd.DataFrame) -> Dict[str, List[Tuple[float, float]]]:
    """Per-scheme empirical CDF from a per-trial table, schemes in first-seen order."""
    return {
        str(scheme): empirical_cdf(group["sum_throughput_bps"].to_numpy())
        for scheme, group in df.groupby("scheme", sort=False)
    }
