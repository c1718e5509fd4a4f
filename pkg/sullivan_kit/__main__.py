"""
sullivan-kit CLI
"""

import functools
import logging
import pathlib
import time
import tomllib
from datetime import timedelta
from typing import Any, Callable, TypeVar

import click
import humanize
from click_default_group import DefaultGroup
from pydantic import ValidationError
from rich.console import Console
from rich.live import Live
from rich.logging import RichHandler
from rich.text import Text

from sullivan_kit.algebra.generators import FreeAlgebra
from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.bounds import BoundQuery, Case, SearchMode, Threshold, optimize_chi
from sullivan_kit.catalog import CATALOG, CatalogEntry, catalog_get, catalog_keys
from sullivan_kit.catalog.hermitian import BettiTable
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.constants import (
    EXIT_INPUT_ERROR,
    EXIT_RESOURCE_LIMIT,
    EXIT_VERIFICATION_FAILED,
)
from sullivan_kit.errors import (
    InapplicableError,
    ModelParseError,
    ResourceLimitError,
    SullivanKitError,
)
from sullivan_kit.fibrations import (
    RelativeSullivan,
    check_versions,
    euler_multiplicativity,
    wilhelm_gap,
)
from sullivan_kit.formats import (
    dumps_record,
    load_model,
    load_record,
    model_record_to_relative,
    relative_to_model_record,
    sullivan_to_model_record,
)
from sullivan_kit.halperin import meier_check, presentation_of
from sullivan_kit.ideals import is_regular_sequence, reorder_xrem
from sullivan_kit.invariants import (
    admissible_b3,
    check_chi_ge_2l,
    find_lefschetz_class,
    four_periodic_chi,
    hard_lefschetz_check,
    profile,
    spherical_bound_check,
)
from sullivan_kit.locations import config_file
from sullivan_kit.reports import (
    CatalogItemRecord,
    CatalogListRecord,
    CatalogShowRecord,
    ErrorRecord,
    LefschetzRecord,
    Record,
    betti_record,
    bound_record,
    classify_record,
    feasible_chi_record,
    fibration_record,
    halperin_record,
    profile_record,
    regular_sequence_record,
    render_human,
    reorder_record,
    table_record,
    validation_record,
)
from sullivan_kit.sullivan.classify import classify, is_two_stage
from sullivan_kit.sullivan.cohomology import cohomology
from sullivan_kit.sullivan.models import SullivanAlgebra, validate
from sullivan_kit.verification import CHECKS, verify_paper

console = Console()
err_console = Console(stderr=True)

F = TypeVar("F", bound=Callable[..., Any])


def load_or_create_config_file() -> dict[str, Any]:
    config = config_file()

    try:
        file_config = tomllib.loads(config.read_text())
    except FileNotFoundError:
        file_config = {}
        try:
            config.touch()
        except OSError:
            pass

    return file_config


def emit(record: Record) -> None:
    context = click.get_current_context(silent=True)
    config = (context and context.find_object(ToolkitConfig)) or ToolkitConfig.get_current()
    if config.output_format == "machine":
        click.echo(record.model_dump_json())
    else:
        console.print(render_human(record))


def error_record(error: Exception) -> ErrorRecord:
    if isinstance(error, ModelParseError):
        return ErrorRecord(
            error=type(error).__name__,
            message=error.message,
            line=error.line,
            column=error.column,
            source=error.source,
        )
    return ErrorRecord(
        error=type(error).__name__,
        message=str(error),
        invariant=getattr(error, "invariant", None),
    )


def reports_errors(command: F) -> F:
    """Turn toolkit errors into an error record and the matching exit code."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except ResourceLimitError as error:
            emit(error_record(error))
            raise SystemExit(EXIT_RESOURCE_LIMIT)
        except (SullivanKitError, ValidationError) as error:
            emit(error_record(error))
            raise SystemExit(EXIT_INPUT_ERROR)

    return wrapper  # type: ignore[return-value]


def _parse_param(text: str) -> tuple[str, Any]:
    name, separator, value = text.partition("=")
    if not separator or not name:
        raise click.BadParameter(f"{text!r} is not of the form name=value")
    if "," in value:
        return name, [int(part) for part in value.split(",") if part]
    try:
        return name, int(value)
    except ValueError:
        return name, value


def _catalog_entry(key: str, params: tuple[str, ...]) -> CatalogEntry:
    return catalog_get(key, **dict(_parse_param(p) for p in params))


def resolve_model(
    model_file: pathlib.Path | None, key: str | None, params: tuple[str, ...]
) -> SullivanAlgebra:
    if (model_file is None) == (key is None):
        raise click.UsageError("Give exactly one of --model and --catalog")
    if model_file is not None:
        return load_model(model_file)
    model = _catalog_entry(key or "", params).model
    if isinstance(model, RelativeSullivan):
        return model.total
    if isinstance(model, BettiTable):
        raise InapplicableError(f"{key} is a table, not a model")
    return model


def resolve_relative(
    model_file: pathlib.Path | None, key: str | None, params: tuple[str, ...]
) -> RelativeSullivan:
    if (model_file is None) == (key is None):
        raise click.UsageError("Give exactly one of --model and --catalog")
    if model_file is not None:
        return model_record_to_relative(load_record(model_file), source=str(model_file))
    model = _catalog_entry(key or "", params).model
    if not isinstance(model, RelativeSullivan):
        raise InapplicableError(f"{key} is not a relative model")
    return model


def model_options(command: F) -> F:
    command = click.option(
        "-p",
        "--param",
        "params",
        multiple=True,
        help="Catalog parameter as name=value (repeatable).",
    )(command)
    command = click.option(
        "-c", "--catalog", "key", type=str, default=None, help="A catalog key."
    )(command)
    command = click.option(
        "-m",
        "--model",
        "model_file",
        type=click.Path(exists=True, dir_okay=False, path_type=pathlib.Path),
        default=None,
        help="A model file (TOML or JSON).",
    )(command)
    return command


def sequence_options(command: F) -> F:
    command = click.option(
        "-r",
        "--relation",
        "relations",
        multiple=True,
        required=True,
        help="A relation polynomial (repeatable).",
    )(command)
    command = click.option(
        "-g",
        "--generator",
        "generators",
        multiple=True,
        required=True,
        help="A generator as name:degree, in ascending degree (repeatable).",
    )(command)
    return command


def _sequence(
    generators: tuple[str, ...], relations: tuple[str, ...]
) -> tuple[FreeAlgebra, list[Polynomial]]:
    declared = []
    for text in generators:
        name, _, degree = text.partition(":")
        try:
            declared.append((name, int(degree)))
        except ValueError:
            raise click.BadParameter(f"{text!r} is not of the form name:degree")
    algebra = FreeAlgebra.of(declared)
    return algebra, [algebra.parse(r) for r in relations]


@click.group(cls=DefaultGroup, default="verify-paper", default_if_no_args=True)
@click.option(
    "-f",
    "--format",
    "output_format",
    type=click.Choice(["human", "machine"]),
    default=None,
    help="Human tables or one JSON record per line.",
)
@click.option("-v", "--verbose", is_flag=True, default=False, help="Log debug output.")
@click.option(
    "--basis-limit",
    type=int,
    default=None,
    help="The largest monomial basis built in a single degree.",
)
@click.pass_context
def cli(
    ctx: click.Context, output_format: str | None, verbose: bool, basis_limit: int | None
) -> None:
    """Compute with Sullivan models of rationally elliptic spaces."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )
    file_config = load_or_create_config_file()
    cli_config: dict[str, Any] = {}
    if output_format:
        cli_config["output_format"] = output_format
    if basis_limit is not None:
        cli_config["basis_limit"] = basis_limit

    toolkit_config: dict[str, Any] = {**file_config, **cli_config}
    try:
        ctx.obj = ToolkitConfig(**toolkit_config)
    except ValidationError as error:
        raise click.BadParameter(str(error))


@cli.command("validate")
@model_options
@click.pass_obj
@reports_errors
def validate_command(
    config: ToolkitConfig,
    model_file: pathlib.Path | None,
    key: str | None,
    params: tuple[str, ...],
) -> None:
    """Check degrees and d² = 0 generator by generator."""
    report = validate(resolve_model(model_file, key, params))
    emit(validation_record(report))
    if not report.ok:
        raise SystemExit(EXIT_INPUT_ERROR)


@cli.command()
@model_options
@click.option("--cutoff", type=int, default=None, help="Highest degree to compute.")
@click.pass_obj
@reports_errors
def betti(
    config: ToolkitConfig,
    model_file: pathlib.Path | None,
    key: str | None,
    params: tuple[str, ...],
    cutoff: int | None,
) -> None:
    """Betti numbers in degrees 0..cutoff."""
    model = resolve_model(model_file, key, params)
    emit(betti_record(model.label, cohomology(model, cutoff=cutoff, config=config)))


@cli.command("profile")
@model_options
@click.pass_obj
@reports_errors
def profile_command(
    config: ToolkitConfig,
    model_file: pathlib.Path | None,
    key: str | None,
    params: tuple[str, ...],
) -> None:
    """Formal dimension, Euler characteristics and the inequality checks."""
    model = resolve_model(model_file, key, params)
    result = profile(model, config)
    try:
        chi_ge_2l: bool | None = check_chi_ge_2l(result)
    except InapplicableError:
        chi_ge_2l = None
    emit(profile_record(result, chi_ge_2l, spherical_bound_check(model, config)))


@cli.command("classify")
@model_options
@click.pass_obj
@reports_errors
def classify_command(
    config: ToolkitConfig,
    model_file: pathlib.Path | None,
    key: str | None,
    params: tuple[str, ...],
) -> None:
    """Minimal, pure and two-stage tests."""
    model = resolve_model(model_file, key, params)
    emit(classify_record(model.label, classify(model), is_two_stage(model)))


@cli.command()
@model_options
@click.pass_obj
@reports_errors
def halperin(
    config: ToolkitConfig,
    model_file: pathlib.Path | None,
    key: str | None,
    params: tuple[str, ...],
) -> None:
    """Negative-degree derivations of the cohomology of a pure model."""
    model = resolve_model(model_file, key, params)
    emit(halperin_record(model.label, meier_check(presentation_of(model))))


@cli.command("hl-check")
@model_options
@click.option(
    "--omega",
    type=str,
    default=None,
    help="A closed degree-2 element. Searched for when omitted.",
)
@click.pass_obj
@reports_errors
def hl_check(
    config: ToolkitConfig,
    model_file: pathlib.Path | None,
    key: str | None,
    params: tuple[str, ...],
    omega: str | None,
) -> None:
    """Hard-Lefschetz test for a given or searched degree-2 class."""
    model = resolve_model(model_file, key, params)
    if omega is not None:
        holds = hard_lefschetz_check(model, model.parse(omega), config)
        record = LefschetzRecord(
            model=model.label, omega=omega, holds=holds, status="checked"
        )
    else:
        search = find_lefschetz_class(model, config)
        record = LefschetzRecord(
            model=model.label,
            omega=None if search.omega is None else str(search.omega),
            holds={"found": True, "none-exists": False}.get(str(search.status)),
            status=str(search.status),
            trials=search.trials,
        )
    emit(record)


@cli.command()
@sequence_options
@click.pass_obj
@reports_errors
def reorder(
    config: ToolkitConfig, generators: tuple[str, ...], relations: tuple[str, ...]
) -> None:
    """Pair relations with generators so that 2·deg x ≤ deg y."""
    algebra, ys = _sequence(generators, relations)
    emit(reorder_record(reorder_xrem(algebra.generators, ys, algebra)))


@cli.command("regular-seq")
@sequence_options
@click.pass_obj
@reports_errors
def regular_seq(
    config: ToolkitConfig, generators: tuple[str, ...], relations: tuple[str, ...]
) -> None:
    """Whether the relations form a regular sequence."""
    algebra, ys = _sequence(generators, relations)
    emit(regular_sequence_record(is_regular_sequence(algebra.generators, ys, algebra)))


@cli.command()
@model_options
@click.pass_obj
@reports_errors
def fibration(
    config: ToolkitConfig,
    model_file: pathlib.Path | None,
    key: str | None,
    params: tuple[str, ...],
) -> None:
    """Weak, strong and alternate checks plus the dimension gap."""
    relative = resolve_relative(model_file, key, params)
    versions = check_versions(relative, config)
    try:
        gap = wilhelm_gap(relative, config)
    except InapplicableError:
        gap = None
    try:
        euler = euler_multiplicativity(relative, config)
    except InapplicableError:
        euler = None
    emit(fibration_record(relative.label, versions, gap, euler))


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Manifold dimension.")
@click.option("--k", "k", type=int, required=True, help="Symmetry parameter.")
@click.option(
    "--case",
    type=click.Choice([c.value for c in Case]),
    default=Case.SPHERE.value,
    help="Low-degree case.",
)
@click.option(
    "--threshold",
    type=click.Choice([t.value for t in Threshold]),
    default=Threshold.N_OVER_K.value,
    help="Lower bound on the free generator degrees.",
)
@click.option(
    "--mode",
    type=click.Choice([m.value for m in SearchMode]),
    default=None,
    help="Search encoding; defaults depend on the case.",
)
@click.pass_obj
@reports_errors
def bound(
    config: ToolkitConfig, n: int, k: int, case: str, threshold: str, mode: str | None
) -> None:
    """Maximize χ over admissible degrees and compare with the closed form."""
    query = BoundQuery(
        n, k, Case(case), Threshold(threshold), SearchMode(mode) if mode else None
    )
    emit(bound_record(query, optimize_chi(query, config)))


@cli.group()
def catalog() -> None:
    """Built-in models and tables."""


@catalog.command("list")
@reports_errors
def catalog_list() -> None:
    """Keys, parameters and provenance of every entry."""
    emit(
        CatalogListRecord(
            entries=[
                CatalogItemRecord(
                    key=key,
                    kind=CATALOG[key].kind,
                    parameters=CATALOG[key].parameters,
                    provenance=CATALOG[key].provenance,
                )
                for key in catalog_keys()
            ]
        )
    )


@catalog.command("show")
@click.argument("key")
@click.option("-p", "--param", "params", multiple=True, help="name=value (repeatable).")
@reports_errors
def catalog_show(key: str, params: tuple[str, ...]) -> None:
    """Print one entry: its model, or its Betti table."""
    entry = _catalog_entry(key, params)
    shown = {name: str(value) for name, value in entry.params.items()}
    if isinstance(entry.model, BettiTable):
        emit(table_record(key, shown, entry.provenance, entry.model))
        return
    if isinstance(entry.model, RelativeSullivan):
        record = relative_to_model_record(entry.model, entry.provenance)
    else:
        record = sullivan_to_model_record(entry.model, entry.provenance)
    emit(CatalogShowRecord(key=key, params=shown, provenance=entry.provenance, model=record))


@catalog.command("export")
@click.argument("key")
@click.option("-p", "--param", "params", multiple=True, help="name=value (repeatable).")
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=pathlib.Path),
    default=None,
    help="Write here instead of standard output.",
)
@click.pass_obj
@reports_errors
def catalog_export(
    config: ToolkitConfig, key: str, params: tuple[str, ...], output: pathlib.Path | None
) -> None:
    """Write a catalog model in the model file format (JSON)."""
    entry = _catalog_entry(key, params)
    if isinstance(entry.model, BettiTable):
        raise InapplicableError(f"{key} is a table and has no model file")
    if isinstance(entry.model, RelativeSullivan):
        record = relative_to_model_record(entry.model, entry.provenance)
    else:
        record = sullivan_to_model_record(entry.model, entry.provenance)
    text = dumps_record(record)
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text)
        if config.output_format == "human":
            console.print(f"[green]Exported {key} to {str(output)!r}")


@cli.command("feasible-chi")
@click.option("--n", "n", type=int, required=True, help="Dimension, n ≡ 2 mod 4.")
@click.option("--b3", "b3", type=int, multiple=True, help="Values of b3 (default 0 and 2).")
@click.pass_obj
@reports_errors
def feasible_chi(config: ToolkitConfig, n: int, b3: tuple[int, ...]) -> None:
    """χ of a four-periodic elliptic n-manifold as a function of b3."""
    rows = [four_periodic_chi(n, value) for value in (b3 or (0, 2))]
    emit(feasible_chi_record(n, rows, admissible_b3(n)))


@cli.command("verify-paper")
@click.option(
    "--only",
    multiple=True,
    type=click.Choice(list(CHECKS)),
    help="Run only the named checks (repeatable).",
)
@click.pass_obj
@reports_errors
def verify_paper_command(config: ToolkitConfig, only: tuple[str, ...]) -> None:
    """Re-run every worked computation and report PASS/FAIL per item."""
    names = list(only) or list(CHECKS)
    started = time.monotonic()
    human = config.output_format == "human"

    def output_progress(done: int, failed: int) -> Text:
        style = "green" if done == len(names) and not failed else "yellow"
        return Text.from_markup(
            f"Checked [b]{done}[/] of [b]{len(names)}[/] items.\n"
            f"[b]{failed}[/] failures so far.",
            style=style,
        )

    if human and console.is_terminal:
        progress = {"done": 0, "failed": 0}
        with Live(output_progress(0, 0), console=console, transient=True) as live:

            def on_result(result: Any) -> None:
                progress["done"] += 1
                progress["failed"] += not result.passed
                live.update(output_progress(progress["done"], progress["failed"]))

            report = verify_paper(config, names, on_result)
    else:
        report = verify_paper(config, names)

    if human:
        console.print(render_human(report))
        elapsed = humanize.naturaldelta(timedelta(seconds=time.monotonic() - started))
        verdict = "[b green]all passed[/]" if report.passed else (
            f"[b red]{len(report.failures)} failed[/]"
        )
        console.print(f"{len(report.results)} checks, {verdict} in {elapsed}")
    else:
        click.echo(report.model_dump_json())
    if not report.passed:
        raise SystemExit(EXIT_VERIFICATION_FAILED)


if __name__ == "__main__":
    cli()
