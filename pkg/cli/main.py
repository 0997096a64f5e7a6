"""Typer command line interface for the RIS user-selection simulator."""

import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, List, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from ris_selection import config
from ris_selection.errors import (
    ConfigError, DimensionError, NumericalError, ResultsIOError, RisSelectionError,
)

app = typer.Typer(
    name="ris-select",
    help="Monte-Carlo comparison of user selection and multiple access over RIS-assisted links",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True, soft_wrap=True)

EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

DEFAULT_CONFIG = config.CONFIG_DIR / "desk.json"


@dataclass
class CliInvocation:
    """Options shared by ``run`` and ``bench``, resolved into a SystemConfig."""
    subcommand: str
    config_path: Path
    overrides: List[str] = field(default_factory=list)
    out_dir: Optional[Path] = None
    schemes: Optional[str] = None
    seed: Optional[int] = None
    threads: Optional[int] = None
    allow_full_scale_jo: bool = False

    def all_overrides(self) -> List[str]:
        """``--set`` pairs followed by the dedicated flags, which win."""
        pairs = list(self.overrides)
        if self.seed is not None:
            pairs.append(f"seed={self.seed}")
        if self.schemes:
            pairs.append(f"schemes={self.schemes}")
        if self.allow_full_scale_jo:
            pairs.append("allow_full_scale_jo=true")
        return pairs

    def load_config(self):
        from ris_selection.models.system import SystemConfig
        return SystemConfig.from_file(self.config_path, self.all_overrides())


def _fail(message: str, code: int) -> None:
    err_console.print(f"[red]Error:[/red] {message}", markup=True, highlight=False)
    raise typer.Exit(code)


@contextmanager
def _handle_errors() -> Iterator[None]:
    try:
        yield
    except ConfigError as e:
        _fail(str(e), EXIT_CONFIG)
    except ResultsIOError as e:
        _fail(str(e), EXIT_IO)
    except (NumericalError, DimensionError) as e:
        _fail(str(e), EXIT_NUMERICAL)
    except OSError as e:
        _fail(f"{e.filename or ''}: {e.strerror or e}", EXIT_IO)
    except (RisSelectionError, RuntimeError) as e:
        _fail(str(e), EXIT_NUMERICAL)


def _setup_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )


def _simulate(inv: CliInvocation):
    from ris_selection.harness.montecarlo import run_montecarlo

    cfg = inv.load_config()
    with Progress(
        TextColumn("[bold]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=err_console,
        transient=True,
    ) as progress:
        task = progress.add_task(inv.subcommand, total=cfg.trials)

        def on_trial(done: int, total: int) -> None:
            progress.update(task, completed=done)

        return run_montecarlo(cfg, threads=inv.threads, progress_callback=on_trial)


ConfigOpt = typer.Option(DEFAULT_CONFIG, "--config", "-c", help="Scenario JSON file or run manifest")
SetOpt = typer.Option(None, "--set", help="Override a config key, key=value (repeatable)")
SchemesOpt = typer.Option(None, "--schemes", help="Comma-separated schemes, e.g. jo,ao,tdma")
SeedOpt = typer.Option(None, "--seed", help="Master seed")
ThreadsOpt = typer.Option(None, "--threads", "-j", min=1,
                          help="Worker threads (default: RIS_THREADS or CPU count)")
FullScaleOpt = typer.Option(False, "--allow-full-scale-jo",
                            help="Run US-JO even above the element limit")


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """Compare US-JO, US-AO, US-Ideal, TDMA and FDMA over random channel draws."""
    _setup_logging(verbose)


@app.command()
def run(
    config_path: Path = ConfigOpt,
    out: Path = typer.Option(config.DEFAULT_OUTPUT_DIR, "--out", "-o",
                             help="Directory for trials.csv, cdf.csv and manifest.json"),
    overrides: Optional[List[str]] = SetOpt,
    schemes: Optional[str] = SchemesOpt,
    seed: Optional[int] = SeedOpt,
    threads: Optional[int] = ThreadsOpt,
    allow_full_scale_jo: bool = FullScaleOpt,
):
    """Run the Monte-Carlo experiment and write per-trial and CDF tables."""
    from ris_selection.formatters.table import TableFormatter
    from ris_selection.harness.persistence import write_results

    inv = CliInvocation("run", config_path, overrides or [], out, schemes, seed,
                        threads, allow_full_scale_jo)
    with _handle_errors():
        results = _simulate(inv)
        paths = write_results(results, inv.out_dir)

    fmt = TableFormatter(console)
    fmt.print_summary(results)
    fmt.print_written(paths)


@app.command()
def bench(
    config_path: Path = ConfigOpt,
    overrides: Optional[List[str]] = SetOpt,
    schemes: Optional[str] = SchemesOpt,
    seed: Optional[int] = SeedOpt,
    threads: Optional[int] = ThreadsOpt,
    allow_full_scale_jo: bool = FullScaleOpt,
):
    """Mean run time per channel realization for each enabled scheme."""
    from ris_selection.formatters.table import TableFormatter

    # timings are only comparable without worker contention
    inv = CliInvocation("bench", config_path, overrides or [], None, schemes, seed,
                        threads or 1, allow_full_scale_jo)
    with _handle_errors():
        results = _simulate(inv)

    TableFormatter(console).print_bench(results)


@app.command()
def cdf(
    trials: Path = typer.Argument(..., help="trials.csv written by `run`"),
    out: Optional[Path] = typer.Option(None, "--out", "-o",
                                       help="CDF CSV to write (default: cdf.csv next to the input)"),
):
    """Recompute per-scheme CDF tables from a stored per-trial CSV."""
    from ris_selection.formatters.table import TableFormatter
    from ris_selection.harness.persistence import CDF_FILE, cdf_from_trials, read_trials, write_cdf

    target = out or trials.parent / CDF_FILE
    with _handle_errors():
        cdfs = cdf_from_trials(read_trials(trials))
        path = write_cdf(cdfs, target)

    TableFormatter(console).print_cdf_counts(cdfs)
    console.print(f"CDF: [cyan]{path}[/cyan]")


if __name__ == "__main__":
    app()
