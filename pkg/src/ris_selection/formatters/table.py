"""Rich table formatting for terminal output."""

from typing import Dict, List, Tuple

from rich.console import Console
from rich.table import Table

from ris_selection import config
from ris_selection.harness.persistence import ResultPaths
from ris_selection.models.results import ResultSet


def _mbps(bps: float) -> str:
    return f"{bps / 1e6:.2f}"


def coherence_verdict(mean_wall_s: float) -> str:
    """Which coherence windows a per-realization runtime fits into."""
    fits = [f"{w * 1e3:g} ms" for w in config.COHERENCE_WINDOWS_S if mean_wall_s <= w]
    return "fits " + ", ".join(fits) if fits else "exceeds coherence time"


class TableFormatter:
    """Format simulation results as Rich tables for terminal display."""

    def __init__(self, console: Console | None = None):
        self.console = console or Console()

    def print_summary(self, results: ResultSet) -> None:
        """Per-scheme sum-throughput statistics."""
        cfg = results.config
        table = Table(title=f"Sum throughput over {results.trial_count} trials "
                            f"(N_b={cfg.n_bs}, K={cfg.n_users}, M={cfg.total_elements})")
        table.add_column("Scheme", style="cyan")
        table.add_column("Mean [Mbit/s]", justify="right", style="green")
        table.add_column("Median [Mbit/s]", justify="right", style="green")
        table.add_column("P10", justify="right")
        table.add_column("P90", justify="right")
        table.add_column("Mean time [ms]", justify="right")
        table.add_column("Unconverged", justify="right", style="dim")

        for row in results.summary():
            table.add_row(
                row["scheme"].label,
                _mbps(row["mean_bps"]),
                _mbps(row["median_bps"]),
                _mbps(row["p10_bps"]),
                _mbps(row["p90_bps"]),
                f"{row['mean_wall_ms']:.3f}",
                str(row["unconverged"]),
            )

        self.console.print(table)

    def print_bench(self, results: ResultSet) -> None:
        """Mean CPU time per channel realization, one row per scheme."""
        table = Table(title=f"Mean run time per realization (M={results.config.total_elements}, "
                            f"{results.trial_count} trials)")
        table.add_column("Scheme", style="cyan")
        table.add_column("Mean time [ms]", justify="right", style="green")
        table.add_column("Coherence", style="dim")

        for scheme in results.schemes:
            mean_s = results.mean_wall_time_s(scheme)
            table.add_row(scheme.label, f"{mean_s * 1e3:.3f}", coherence_verdict(mean_s))

        self.console.print(table)

    def print_written(self, paths: ResultPaths) -> None:
        self.console.print(f"Trials:   [cyan]{paths.trials}[/cyan]")
        self.console.print(f"CDF:      [cyan]{paths.cdf}[/cyan]")
        self.console.print(f"Manifest: [cyan]{paths.manifest}[/cyan]")

    def print_cdf_counts(self, cdfs: Dict[str, List[Tuple[float, float]]]) -> None:
        """Number of CDF points and median per scheme."""
        table = Table(title="CDF tables")
        table.add_column("Scheme", style="cyan")
        table.add_column("Points", justify="right")
        table.add_column("Median [Mbit/s]", justify="right", style="green")
        for scheme, pairs in cdfs.items():
            median = next(v for v, p in pairs if p >= 0.5)
            table.add_row(scheme, str(len(pairs)), _mbps(median))
        self.console.print(table)
