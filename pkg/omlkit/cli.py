"""Command-line interface for the orthomodular lattice toolkit."""

# Standard library
from collections.abc import Callable
from pathlib import Path
from typing import Annotated

# Third-party
import typer
from pydantic import ValidationError
from rich.console import Console

# Local
from omlkit import __version__
from omlkit.analysis.analyses import (
    CheckAnalysis,
    LawsAnalysis,
    LpDumpAnalysis,
    MgeAnalysis,
    NgoAnalysis,
    ParseAnalysis,
    StatesAnalysis,
)
from omlkit.analysis.strategy import LatticeAnalysis
from omlkit.commands.errors import CLIError, ErrorHandler, UsageError
from omlkit.commands.formatters import BatchFormatter, LawFormatter, MgeFormatter
from omlkit.config.constants import ExitCode, Subcommand
from omlkit.config.settings import get_settings
from omlkit.equations.dsl import parse_equation
from omlkit.errors import InternalConsistencyError, OmlKitError
from omlkit.models.run import LatticeReport, ReportStatus, RunConfig
from omlkit.pipeline.batch import BatchRunner, load_admitting_corpus
from omlkit.pipeline.observers import LogObserver, MetricsObserver, ProgressBarObserver
from omlkit.utils.logging import LogLevel, get_logger, setup_logging

app = typer.Typer(
    name="omlkit",
    help="Orthomodular lattice toolkit - equations, n-Go, strong states and MGE synthesis",
    no_args_is_help=True,
)

logger = get_logger(__name__)

# ============================================================================
# Shared options
# ============================================================================

InputPath = Annotated[Path, typer.Argument(help="Diagram file, one Greechie diagram per line.")]
JsonOption = Annotated[bool, typer.Option("--json", help="Emit one JSON object per lattice.")]
WorkersOption = Annotated[int | None, typer.Option("--workers", "-w", help="Worker pool size.", min=1, max=64)]
NoVerifyOption = Annotated[bool, typer.Option("--no-verify", help="Skip lattice law verification.")]
LenientOption = Annotated[bool, typer.Option("--lenient", help="Skip malformed diagram lines with a warning.")]
ProgressOption = Annotated[bool, typer.Option("--progress", help="Show a progress bar on stderr.")]


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        typer.echo(f"omlkit version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
        _version: Annotated[
            bool,
            typer.Option(
                "--version",
                "-v",
                help="Show version and exit.",
                callback=version_callback,
                is_eager=True,
            ),
        ] = False,
        verbose: Annotated[
            bool,
            typer.Option(
                "--verbose",
                "-V",
                help="Enable verbose output.",
            ),
        ] = False,
) -> None:
    """Orthomodular lattice toolkit: batch analyses over Greechie diagram files."""
    settings = get_settings()

    # Console shows warnings by default; stdout is reserved for verdicts
    file_level: LogLevel = "DEBUG" if verbose else "INFO"
    console_level: LogLevel = "DEBUG" if verbose else "WARNING"
    setup_logging(level=file_level, console_level=console_level, log_file=settings.log_file)


# ============================================================================
# Batch execution
# ============================================================================


def _emit_report(config: RunConfig, report: LatticeReport, console: Console) -> None:
    """Write one report in the requested format; tables and panels go to the stderr console."""
    if config.json_output:
        typer.echo(report.render_json())
        return

    if report.status is ReportStatus.OK and config.subcommand is Subcommand.LAWS:
        typer.echo(f"{report.key}: {report.summary}")
        console.print(LawFormatter.format_law_table(report.key, report.fields["checks"]))
        return

    if report.status is ReportStatus.OK and config.subcommand is Subcommand.MGE and "mge" in report.fields:
        typer.echo(f"{report.key}: {report.summary}")
        console.print(MgeFormatter.format_mge_panel(report.key, report.fields))
        return

    typer.echo(report.render_text())


def _run_batch(config: RunConfig, analysis: LatticeAnalysis, progress: bool) -> None:
    """Run the analysis on the whole file and print every report.

    Raises:
        typer.Exit: With status 1 if any lattice was rejected.
    """
    runner = BatchRunner(analysis, workers=config.workers, verify=config.verify)
    metrics = MetricsObserver()
    runner.attach(metrics)
    runner.attach(LogObserver())

    if progress:
        with ProgressBarObserver() as bar:
            runner.attach(bar)
            reports = runner.run_file(config.input_path, lenient=config.lenient)

    else:
        reports = runner.run_file(config.input_path, lenient=config.lenient)

    console = Console(stderr=True)
    for report in reports:
        _emit_report(config, report, console)

    if progress:
        typer.echo(BatchFormatter.format_summary(metrics.get_metrics()), err=True)

    if any(report.status is ReportStatus.REJECTED for report in reports):
        raise typer.Exit(ExitCode.INPUT_ERROR)


def _execute(prepare: Callable[[], tuple[RunConfig, LatticeAnalysis]], progress: bool) -> None:
    """Build the run, execute it and map errors to exit statuses."""
    try:
        try:
            config, analysis = prepare()

        except ValidationError as error:
            raise UsageError("; ".join(str(e["msg"]) for e in error.errors())) from error

        _run_batch(config, analysis, progress)

    except InternalConsistencyError as error:
        logger.exception("Internal consistency failure")
        typer.echo(ErrorHandler.handle(error), err=True)
        raise typer.Exit(ExitCode.INTERNAL_ERROR) from error

    except (OmlKitError, CLIError, OSError) as error:
        typer.echo(ErrorHandler.handle(error), err=True)
        raise typer.Exit(ExitCode.INPUT_ERROR) from error


def _workers(workers: int | None) -> int:
    return get_settings().workers if workers is None else workers


# ============================================================================
# Subcommands
# ============================================================================


@app.command()
def parse(
        input_path: InputPath,
        json_output: JsonOption = False,
        workers: WorkersOption = None,
        no_verify: NoVerifyOption = False,
        lenient: LenientOption = False,
        progress: ProgressOption = False,
) -> None:
    """Parse every diagram and report its lattice size.

    Examples:
        omlkit parse peterson.gre
    """

    def prepare() -> tuple[RunConfig, LatticeAnalysis]:
        config = RunConfig(
            subcommand=Subcommand.PARSE,
            input_path=input_path,
            json_output=json_output,
            workers=_workers(workers),
            verify=not no_verify,
            lenient=lenient,
        )
        return config, ParseAnalysis()

    _execute(prepare, progress)


@app.command()
def laws(
        input_path: InputPath,
        json_output: JsonOption = False,
        workers: WorkersOption = None,
        lenient: LenientOption = False,
        progress: ProgressOption = False,
) -> None:
    """Check every lattice, ortholattice and orthomodular law exhaustively.

    Examples:
        omlkit laws peterson.gre
    """

    def prepare() -> tuple[RunConfig, LatticeAnalysis]:
        config = RunConfig(
            subcommand=Subcommand.LAWS,
            input_path=input_path,
            json_output=json_output,
            workers=_workers(workers),
            lenient=lenient,
        )
        return config, LawsAnalysis()

    _execute(prepare, progress)


@app.command()
def check(
        input_path: InputPath,
        eq: Annotated[str | None, typer.Option("--eq", help="Equation text.")] = None,
        eq_file: Annotated[Path | None, typer.Option("--eq-file", help="File holding the equation text.")] = None,
        var_cap: Annotated[int | None, typer.Option("--var-cap", help="Maximum variable count.", min=1)] = None,
        json_output: JsonOption = False,
        workers: WorkersOption = None,
        no_verify: NoVerifyOption = False,
        lenient: LenientOption = False,
        progress: ProgressOption = False,
) -> None:
    """Check an equation on every assignment of lattice elements.

    Examples:
        omlkit check --eq "a ^ (a' v b) =< b" boolean.gre
        omlkit check --eq-file mayet.eq peterson.gre --var-cap 6
    """

    def prepare() -> tuple[RunConfig, LatticeAnalysis]:
        if (eq is None) == (eq_file is None):
            raise UsageError("give exactly one of --eq and --eq-file")

        text = eq if eq is not None else eq_file.read_text(encoding="utf-8").strip()  # type: ignore[union-attr]
        config = RunConfig(
            subcommand=Subcommand.CHECK,
            input_path=input_path,
            equation=text,
            var_cap=get_settings().var_cap if var_cap is None else var_cap,
            json_output=json_output,
            workers=_workers(workers),
            verify=not no_verify,
            lenient=lenient,
        )
        equation = parse_equation(text)
        return config, CheckAnalysis(equation, var_cap=config.var_cap)

    _execute(prepare, progress)


@app.command()
def ngo(
        input_path: InputPath,
        cutoff: Annotated[int | None, typer.Option("--cutoff", help="Largest n tested.", min=3)] = None,
        json_output: JsonOption = False,
        workers: WorkersOption = None,
        no_verify: NoVerifyOption = False,
        lenient: LenientOption = False,
        progress: ProgressOption = False,
) -> None:
    """Find the first n for which n-Go fails, or certify that all hold.

    Examples:
        omlkit ngo peterson.gre
        omlkit ngo --cutoff 20 --json catalog.gre
    """

    def prepare() -> tuple[RunConfig, LatticeAnalysis]:
        config = RunConfig(
            subcommand=Subcommand.NGO,
            input_path=input_path,
            cutoff=get_settings().ngo_cutoff if cutoff is None else cutoff,
            json_output=json_output,
            workers=_workers(workers),
            verify=not no_verify,
            lenient=lenient,
        )
        return config, NgoAnalysis(cutoff=config.cutoff)

    _execute(prepare, progress)


@app.command()
def states(
        input_path: InputPath,
        all_pairs: Annotated[bool, typer.Option("--all-pairs", help="Collect every refuting pair.")] = False,
        json_output: JsonOption = False,
        workers: WorkersOption = None,
        no_verify: NoVerifyOption = False,
        lenient: LenientOption = False,
        progress: ProgressOption = False,
) -> None:
    """Decide whether each lattice admits a strong set of states.

    Examples:
        omlkit states peterson.gre
    """

    def prepare() -> tuple[RunConfig, LatticeAnalysis]:
        config = RunConfig(
            subcommand=Subcommand.STATES,
            input_path=input_path,
            all_pairs=all_pairs,
            json_output=json_output,
            workers=_workers(workers),
            verify=not no_verify,
            lenient=lenient,
        )
        return config, StatesAnalysis(all_pairs=config.all_pairs)

    _execute(prepare, progress)


def _parse_pair(text: str) -> tuple[str, str]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise UsageError(f"--pair expects two element labels separated by a comma, got {text!r}")

    return parts[0], parts[1]


@app.command("lp-dump")
def lp_dump(
        input_path: InputPath,
        pair: Annotated[str, typer.Option("--pair", help="Element labels X,Y (e.g. \"a1,a7'\").")],
        json_output: JsonOption = False,
        workers: WorkersOption = None,
        no_verify: NoVerifyOption = False,
        lenient: LenientOption = False,
        progress: ProgressOption = False,
) -> None:
    """Print and solve the state LP minimizing m(Y) subject to m(X) = 1.

    Examples:
        omlkit lp-dump --pair "a1,a7'" peterson.gre
    """

    def prepare() -> tuple[RunConfig, LatticeAnalysis]:
        config = RunConfig(
            subcommand=Subcommand.LP_DUMP,
            input_path=input_path,
            pair=_parse_pair(pair),
            json_output=json_output,
            workers=_workers(workers),
            verify=not no_verify,
            lenient=lenient,
        )
        assert config.pair is not None
        return config, LpDumpAnalysis(config.pair)

    _execute(prepare, progress)


@app.command()
def mge(
        input_path: InputPath,
        seed_order: Annotated[
            int | None,
            typer.Option("--seed-order", help="Shuffle the block relaxation order with this seed."),
        ] = None,
        corpus: Annotated[
            Path | None,
            typer.Option("--corpus", help="Diagram file of lattices the MGE must hold on."),
        ] = None,
        json_output: JsonOption = False,
        workers: WorkersOption = None,
        no_verify: NoVerifyOption = False,
        lenient: LenientOption = False,
        progress: ProgressOption = False,
) -> None:
    """Synthesize a Mayet-Godowski equation from each lattice without strong states.

    Examples:
        omlkit mge peterson.gre --corpus admits.gre
    """

    def prepare() -> tuple[RunConfig, LatticeAnalysis]:
        config = RunConfig(
            subcommand=Subcommand.MGE,
            input_path=input_path,
            seed_order=seed_order,
            corpus=corpus,
            json_output=json_output,
            workers=_workers(workers),
            verify=not no_verify,
            lenient=lenient,
        )
        lattices = load_admitting_corpus(config.corpus, verify=config.verify) if config.corpus else []
        return config, MgeAnalysis(corpus=lattices, seed=config.seed_order)

    _execute(prepare, progress)


if __name__ == "__main__":
    app()
