from io import StringIO

import pytest
from rich.console import Console

from sullivan_kit.bounds import BoundQuery, optimize_chi
from sullivan_kit.catalog import relative
from sullivan_kit.catalog.hermitian import hermitian_betti
from sullivan_kit.fibrations import check_versions, euler_multiplicativity, wilhelm_gap
from sullivan_kit.halperin import AlgebraPresentation, meier_check
from sullivan_kit.invariants import profile
from sullivan_kit.reports import (
    CheckResult,
    ErrorRecord,
    VerificationReport,
    betti_record,
    bound_record,
    fibration_record,
    halperin_record,
    parse_report,
    profile_record,
    render_human,
    table_record,
)
from sullivan_kit.sullivan.cohomology import cohomology


def _render(record) -> str:
    console = Console(file=StringIO(), width=160, color_system=None)
    console.print(render_human(record))
    return console.file.getvalue()


@pytest.fixture
def records(w6, config):
    fibration = relative.alternate_not_wilhelm()
    query = BoundQuery(40, 4)
    return [
        betti_record(w6.label, cohomology(w6, cutoff=6, config=config)),
        profile_record(profile(w6, config), True, True),
        halperin_record(
            "crafted",
            meier_check(
                AlgebraPresentation.build([("a", 2), ("b", 4)], ["a^2", "a*b", "b^2"])
            ),
        ),
        fibration_record(
            fibration.label,
            check_versions(fibration, config),
            wilhelm_gap(fibration, config),
            euler_multiplicativity(relative.twistor(1), config),
        ),
        bound_record(query, optimize_chi(query, config)),
        table_record("hermitian", {"family": "M5"}, "E6", hermitian_betti("M5", config)),
        VerificationReport(
            results=[CheckResult(name="halperin", citation="c", passed=True, detail="ok")]
        ),
        ErrorRecord(error="ModelParseError", message="Empty polynomial", line=3, column=1),
    ]


def test_machine_lines_parse_back_identically(records):
    for record in records:
        line = record.model_dump_json()
        parsed = parse_report(line)
        assert type(parsed) is type(record)
        assert parsed.model_dump_json() == line


def test_every_record_renders(records):
    for record in records:
        assert _render(record).strip()


def test_betti_numbers_render_plainly(w6, config):
    record = betti_record(w6.label, cohomology(w6, cutoff=6, config=config))
    assert _render(record).strip() == "1 0 2 0 2 0 1"


def test_fibration_record_fields(records):
    record = records[3]
    assert (record.fiber_dim, record.base_dim, record.gap) == (74, 72, -2)
    assert record.alternate
    assert not record.strong
    assert record.euler == [4, 2, 2]


def test_rationals_travel_as_strings(records):
    bound = records[4]
    assert bound.value == "8"
    assert bound.cap == "44"
    assert records[1].chi_formula == "6"


def test_markup_in_messages_is_escaped():
    record = ErrorRecord(error="ModelParseError", message="bad [b]token[/b]")
    assert "[b]token[/b]" in _render(record)


def test_verification_report_summary():
    report = VerificationReport(
        results=[
            CheckResult(name="a", citation="", passed=True, detail=""),
            CheckResult(name="b", citation="", passed=False, detail="broken"),
        ]
    )
    assert not report.passed
    assert [r.name for r in report.failures] == ["b"]
