"""Report records produced by the CLI, and their human rendering.

Each command produces one frozen pydantic record. In machine mode a record is
printed as a single JSON line; `parse_report` reads such a line back.
Rationals are carried as strings ("3/2") so that they survive JSON exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter
from rich.console import Group, RenderableType
from rich.markup import escape
from rich.table import Table
from rich.text import Text

from sullivan_kit.bounds import BoundQuery, Optimum, closed_form_cap, generator_bound, relaxed_optimum
from sullivan_kit.catalog.hermitian import BettiTable
from sullivan_kit.fibrations import EulerCheck, VersionReport, WilhelmGap
from sullivan_kit.formats.records import ModelRecord
from sullivan_kit.halperin import MeierReport
from sullivan_kit.ideals import RegularSequenceReport, XremPairing
from sullivan_kit.invariants import EllipticProfile, FourPeriodicChi
from sullivan_kit.sullivan.classify import Classification
from sullivan_kit.sullivan.cohomology import BettiVector
from sullivan_kit.sullivan.models import ValidationReport


def rational(value: Fraction | int | None) -> str | None:
    return None if value is None else str(Fraction(value))


class Record(BaseModel):
    model_config = ConfigDict(frozen=True)


class GeneratorCheckRecord(Record):
    name: str
    status: str
    detail: str = ""


class ValidationRecord(Record):
    kind: Literal["validate"] = "validate"
    model: str
    ok: bool
    checks: list[GeneratorCheckRecord]


class BettiRecord(Record):
    kind: Literal["betti"] = "betti"
    model: str
    cutoff: int
    policy: str
    """"user" or "formal-dimension+margin"."""
    betti: list[int]


class ProfileRecord(Record):
    kind: Literal["profile"] = "profile"
    model: str
    formal_dim: int
    chi_formula: str | None
    chi_homological: int
    chi_pi: int
    betti: list[int]
    generator_count: int
    spherical_dim: int
    total_dimension: int
    chi_ge_2l: bool | None
    """None when χ ≤ 0 and the inequality does not apply."""
    spherical_bound: bool


class ClassifyRecord(Record):
    kind: Literal["classify"] = "classify"
    model: str
    minimal: bool
    pure: bool
    two_stage: bool
    spherical_dim: int


class HalperinRecord(Record):
    kind: Literal["halperin"] = "halperin"
    model: str
    verdict: str
    generator_count: int
    shifts_checked: list[int]
    witness_shift: int | None = None
    witness: list[dict[str, str]] = Field(default_factory=list)


class LefschetzRecord(Record):
    kind: Literal["hl-check"] = "hl-check"
    model: str
    omega: str | None
    holds: bool | None
    status: str
    trials: int = 0


class ReorderRecord(Record):
    kind: Literal["reorder"] = "reorder"
    permutation: list[int]
    degree_pairs: list[tuple[int, int]]
    satisfies_degree_bound: bool


class RegularSequenceRecord(Record):
    kind: Literal["regular-seq"] = "regular-seq"
    regular: bool
    quotient_dim: int | None
    expected_dim: str


class FibrationRecord(Record):
    kind: Literal["fibration"] = "fibration"
    model: str
    weak: bool
    strong: bool
    alternate: bool
    fiber_odd_degree_sum: int
    base_odd_degree_sum: int
    degree_sums_hold: bool
    regular_sequence: bool | None
    intersection_trivial: bool
    transgression: dict[str, str]
    base_dim: int | None
    fiber_dim: int | None
    gap: int | None
    lemma02_bound: int | None
    f0_bound: int | None
    euler: list[int] | None
    """χ of total, base and fiber."""
    notes: list[str] = Field(default_factory=list)


class BoundRecord(Record):
    kind: Literal["bound"] = "bound"
    n: int
    k: int
    case: str
    threshold: str
    mode: str
    c: int
    generator_bound: int
    value: str
    witness: list[tuple[int, int]]
    l: int
    cap: str
    relaxed: str


class CatalogItemRecord(Record):
    key: str
    kind: str
    parameters: list[str]
    provenance: str


class CatalogListRecord(Record):
    kind: Literal["catalog-list"] = "catalog-list"
    entries: list[CatalogItemRecord]


class CatalogShowRecord(Record):
    kind: Literal["catalog-show"] = "catalog-show"
    key: str
    params: dict[str, str]
    provenance: str
    model: ModelRecord | None = None
    betti: dict[int, int] | None = None
    passes_periodicity: bool | None = None
    first_deviation: int | None = None


class FeasibleChiRow(Record):
    b3: int
    chi: int
    positive: bool


class FeasibleChiRecord(Record):
    kind: Literal["feasible-chi"] = "feasible-chi"
    n: int
    rows: list[FeasibleChiRow]
    admissible_b3: list[int]


class CheckResult(Record):
    kind: Literal["check"] = "check"
    name: str
    citation: str
    passed: bool
    detail: str


class VerificationReport(Record):
    kind: Literal["verify-paper"] = "verify-paper"
    results: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [result for result in self.results if not result.passed]


class ErrorRecord(Record):
    kind: Literal["error"] = "error"
    error: str
    message: str
    invariant: str | None = None
    line: int | None = None
    column: int | None = None
    source: str | None = None


Report = Annotated[
    Union[
        ValidationRecord,
        BettiRecord,
        ProfileRecord,
        ClassifyRecord,
        HalperinRecord,
        LefschetzRecord,
        ReorderRecord,
        RegularSequenceRecord,
        FibrationRecord,
        BoundRecord,
        CatalogListRecord,
        CatalogShowRecord,
        FeasibleChiRecord,
        CheckResult,
        VerificationReport,
        ErrorRecord,
    ],
    Field(discriminator="kind"),
]

_report_adapter: TypeAdapter[Report] = TypeAdapter(Report)


def parse_report(line: str) -> Record:
    return _report_adapter.validate_json(line)


def validation_record(report: ValidationReport) -> ValidationRecord:
    return ValidationRecord(
        model=report.model,
        ok=report.ok,
        checks=[
            GeneratorCheckRecord(name=c.name, status=str(c.status), detail=c.detail)
            for c in report.checks
        ],
    )


def betti_record(model: str, betti: BettiVector) -> BettiRecord:
    return BettiRecord(
        model=model, cutoff=betti.cutoff, policy=str(betti.policy), betti=list(betti.dims)
    )


def profile_record(
    profile: EllipticProfile, chi_ge_2l: bool | None, spherical_bound: bool
) -> ProfileRecord:
    return ProfileRecord(
        model=profile.model,
        formal_dim=profile.formal_dim,
        chi_formula=rational(profile.chi_formula),
        chi_homological=profile.chi_homological,
        chi_pi=profile.chi_pi,
        betti=list(profile.betti.dims),
        generator_count=profile.generator_count,
        spherical_dim=profile.spherical_dim,
        total_dimension=profile.total_dimension,
        chi_ge_2l=chi_ge_2l,
        spherical_bound=spherical_bound,
    )


def classify_record(model: str, classification: Classification, two_stage: bool) -> ClassifyRecord:
    return ClassifyRecord(
        model=model,
        minimal=classification.is_minimal,
        pure=classification.is_pure,
        two_stage=two_stage,
        spherical_dim=classification.spherical_dim,
    )


def halperin_record(model: str, report: MeierReport) -> HalperinRecord:
    witness = report.witness
    return HalperinRecord(
        model=model,
        verdict=str(report.verdict),
        generator_count=report.generator_count,
        shifts_checked=list(report.shifts_checked),
        witness_shift=witness.shift if witness else None,
        witness=[
            {name: str(image) for name, image in theta.items() if image}
            for theta in (witness.basis if witness else ())
        ],
    )


def reorder_record(pairing: XremPairing) -> ReorderRecord:
    return ReorderRecord(
        permutation=list(pairing.permutation),
        degree_pairs=list(pairing.degree_pairs),
        satisfies_degree_bound=pairing.satisfies_degree_bound,
    )


def regular_sequence_record(report: RegularSequenceReport) -> RegularSequenceRecord:
    return RegularSequenceRecord(
        regular=report.regular,
        quotient_dim=report.quotient_dim,
        expected_dim=str(report.expected_dim),
    )


def fibration_record(
    model: str,
    versions: VersionReport,
    gap: WilhelmGap | None,
    euler: EulerCheck | None,
) -> FibrationRecord:
    alternate = versions.alternate
    return FibrationRecord(
        model=model,
        weak=versions.weak,
        strong=versions.strong,
        alternate=alternate.holds,
        fiber_odd_degree_sum=alternate.fiber_odd_degree_sum,
        base_odd_degree_sum=alternate.base_odd_degree_sum,
        degree_sums_hold=alternate.degree_sums_hold,
        regular_sequence=alternate.regular_sequence,
        intersection_trivial=alternate.intersection_trivial,
        transgression={name: str(image) for name, image in versions.transgression.map.items()},
        base_dim=gap.base_dim if gap else None,
        fiber_dim=gap.fiber_dim if gap else None,
        gap=gap.gap if gap else None,
        lemma02_bound=gap.lemma02_bound if gap else None,
        f0_bound=gap.f0_bound if gap else None,
        euler=[euler.total, euler.base, euler.fiber] if euler else None,
        notes=list(versions.notes),
    )


def bound_record(query: BoundQuery, optimum: Optimum) -> BoundRecord:
    return BoundRecord(
        n=query.n,
        k=query.k,
        case=str(query.case),
        threshold=str(query.threshold),
        mode=str(query.search_mode),
        c=query.c,
        generator_bound=generator_bound(query),
        value=str(optimum.value),
        witness=list(optimum.witness),
        l=optimum.l,
        cap=str(closed_form_cap(query.n, query.k)),
        relaxed=str(relaxed_optimum(query)),
    )


def table_record(key: str, params: dict[str, str], provenance: str, table: BettiTable) -> CatalogShowRecord:
    return CatalogShowRecord(
        key=key,
        params=params,
        provenance=provenance,
        betti=dict(table.entries),
        passes_periodicity=table.passes_periodicity,
        first_deviation=table.first_deviation,
    )


def feasible_chi_record(n: int, rows: list[FourPeriodicChi], admissible: list[int]) -> FeasibleChiRecord:
    return FeasibleChiRecord(
        n=n,
        rows=[FeasibleChiRow(b3=r.b3, chi=r.chi, positive=r.positive) for r in rows],
        admissible_b3=admissible,
    )


def _yes_no(value: bool | None) -> str:
    if value is None:
        return "[dim]n/a[/]"
    return "[green]yes[/]" if value else "[red]no[/]"


def _pass_fail(value: bool) -> str:
    return "[b green]PASS[/]" if value else "[b red]FAIL[/]"


def _fields(title: str, rows: list[tuple[str, str]]) -> Table:
    table = Table(title=title, show_header=False, title_justify="left")
    table.add_column(style="bold")
    table.add_column()
    for label, value in rows:
        table.add_row(label, value)
    return table


def render_human(record: Record) -> RenderableType:
    """A rich renderable for a report record."""
    match record:
        case ValidationRecord():
            table = Table(title=f"{record.model}: {'valid' if record.ok else 'invalid'}")
            table.add_column("generator")
            table.add_column("status")
            table.add_column("detail")
            for check in record.checks:
                style = "green" if check.status == "ok" else "red"
                table.add_row(check.name, f"[{style}]{check.status}[/]", check.detail)
            return table
        case BettiRecord():
            return Text(" ".join(str(b) for b in record.betti))
        case ProfileRecord():
            return _fields(
                record.model,
                [
                    ("formal dimension", str(record.formal_dim)),
                    ("χ (degree ratio)", record.chi_formula or "[dim]n/a[/]"),
                    ("χ (homological)", str(record.chi_homological)),
                    ("χπ", str(record.chi_pi)),
                    ("Betti", " ".join(str(b) for b in record.betti)),
                    ("dim H", str(record.total_dimension)),
                    ("l", str(record.generator_count)),
                    ("spherical dimension", str(record.spherical_dim)),
                    ("χ ≥ 2^l", _yes_no(record.chi_ge_2l)),
                    ("dim H ≥ 2^(spherical dim)", _yes_no(record.spherical_bound)),
                ],
            )
        case ClassifyRecord():
            return _fields(
                record.model,
                [
                    ("minimal", _yes_no(record.minimal)),
                    ("pure", _yes_no(record.pure)),
                    ("two-stage", _yes_no(record.two_stage)),
                    ("spherical dimension", str(record.spherical_dim)),
                ],
            )
        case HalperinRecord():
            rows = [
                ("verdict", record.verdict),
                ("generators", str(record.generator_count)),
                ("shifts checked", ", ".join(str(s) for s in record.shifts_checked) or "-"),
            ]
            for theta in record.witness:
                rows.append(
                    (f"θ (degree {record.witness_shift})", ", ".join(f"{k} ↦ {v}" for k, v in theta.items()))
                )
            return _fields(record.model, rows)
        case LefschetzRecord():
            return _fields(
                record.model,
                [
                    ("ω", record.omega or "[dim]none[/]"),
                    ("Hard-Lefschetz", _yes_no(record.holds)),
                    ("status", record.status),
                ],
            )
        case ReorderRecord():
            pairs = ", ".join(f"({x}, {y})" for x, y in record.degree_pairs)
            return Text.from_markup(
                f"order {' '.join(str(i) for i in record.permutation)}; pairs {pairs}; "
                f"2·deg x ≤ deg y: {_yes_no(record.satisfies_degree_bound)}"
            )
        case RegularSequenceRecord():
            return Text.from_markup(
                f"regular: {_yes_no(record.regular)}; quotient dimension "
                f"{record.quotient_dim if record.quotient_dim is not None else '∞'} "
                f"(expected {record.expected_dim})"
            )
        case FibrationRecord():
            relation = "<" if record.degree_sums_hold else "≥"
            return _fields(
                record.model,
                [
                    ("gap", "n/a" if record.gap is None else str(record.gap)),
                    ("dim B, dim F", f"{record.base_dim}, {record.fiber_dim}"),
                    ("weak", _yes_no(record.weak)),
                    ("strong", "OK" if record.strong else "[red]FAILS[/]"),
                    (
                        "alternate",
                        f"degree sums {record.fiber_odd_degree_sum} {relation} "
                        f"{record.base_odd_degree_sum}; regular sequence "
                        f"{_yes_no(record.regular_sequence)}; intersection trivial "
                        f"{_yes_no(record.intersection_trivial)}",
                    ),
                    (
                        "d₀",
                        ", ".join(f"{k} ↦ {v}" for k, v in record.transgression.items()),
                    ),
                    ("χ total, base, fiber", " ".join(str(v) for v in record.euler or [])),
                    *(("note", note) for note in record.notes),
                ],
            )
        case BoundRecord():
            witness = ", ".join(f"({x}, {y})" for x, y in record.witness)
            return _fields(
                f"n = {record.n}, k = {record.k}, {record.case}",
                [
                    ("max", record.value),
                    ("witness", witness),
                    ("l", f"{record.l} (bound {record.generator_bound})"),
                    ("closed-form cap", record.cap),
                    ("relaxation", record.relaxed),
                    ("search", f"{record.mode}, deg x > {record.threshold}, c = {record.c}"),
                ],
            )
        case CatalogListRecord():
            table = Table(title="Catalog")
            table.add_column("key", style="bold")
            table.add_column("kind")
            table.add_column("parameters")
            table.add_column("provenance")
            for entry in record.entries:
                table.add_row(entry.key, entry.kind, ", ".join(entry.parameters), entry.provenance)
            return table
        case CatalogShowRecord():
            rows = [("provenance", record.provenance)]
            if record.params:
                rows.append(("parameters", ", ".join(f"{k}={v}" for k, v in record.params.items())))
            if record.model is not None:
                rows.append(
                    (
                        "generators",
                        ", ".join(f"{g.name} ({g.degree})" for g in record.model.generators),
                    )
                )
                rows.extend((f"d{k}", v) for k, v in record.model.differential.items())
                if record.model.fiber is not None:
                    rows.append(("fiber", ", ".join(record.model.fiber)))
            if record.betti is not None:
                rows.append(("Betti", ", ".join(f"b{d}={b}" for d, b in record.betti.items())))
                rows.append(("b2 = … = b10 = 1", _yes_no(record.passes_periodicity)))
            return _fields(record.key, rows)
        case FeasibleChiRecord():
            table = Table(title=f"χ for n = {record.n}")
            table.add_column("b3")
            table.add_column("χ")
            table.add_column("positive")
            for row in record.rows:
                table.add_row(str(row.b3), str(row.chi), _yes_no(row.positive))
            return Group(
                table, Text(f"admissible b3: {', '.join(str(b) for b in record.admissible_b3)}")
            )
        case CheckResult():
            return Text.from_markup(
                f"{_pass_fail(record.passed)} {record.name}: {escape(record.detail)}"
            )
        case VerificationReport():
            table = Table(title="Verification battery")
            table.add_column("check", style="bold")
            table.add_column("result")
            table.add_column("citation")
            table.add_column("detail")
            for result in record.results:
                table.add_row(
                    result.name, _pass_fail(result.passed), result.citation, escape(result.detail)
                )
            return table
        case ErrorRecord():
            where = ", ".join(
                part
                for part in (
                    record.source,
                    f"line {record.line}" if record.line is not None else None,
                    f"column {record.column}" if record.column is not None else None,
                )
                if part
            )
            prefix = f"{where}: " if where else ""
            suffix = f" [dim]({record.invariant})[/]" if record.invariant else ""
            return Text.from_markup(
                f"[b red]{record.error}[/] {escape(prefix + record.message)}{suffix}"
            )
    return Text(record.model_dump_json())
