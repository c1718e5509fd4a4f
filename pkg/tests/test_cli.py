import json

import pytest
from click.testing import CliRunner

from sullivan_kit.__main__ import cli
from sullivan_kit.catalog import CATALOG, CatalogItem
from sullivan_kit.catalog.spaces import _flag
from sullivan_kit.constants import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_LIMIT,
    EXIT_VERIFICATION_FAILED,
)
from sullivan_kit.reports import parse_report


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def machine(runner: CliRunner, *args: str):
    result = runner.invoke(cli, ["--format", "machine", *args])
    lines = [line for line in result.output.splitlines() if line.strip()]
    return result, parse_report(lines[-1]) if lines else None


def test_betti_human_output(runner, tmp_path):
    path = tmp_path / "w6.json"
    assert runner.invoke(cli, ["catalog", "export", "w6", "-o", str(path)]).exit_code == EXIT_OK
    result = runner.invoke(cli, ["betti", "--model", str(path), "--cutoff", "6"])
    assert result.exit_code == EXIT_OK
    assert result.output.strip() == "1 0 2 0 2 0 1"


def test_betti_machine_output(runner):
    result, record = machine(runner, "betti", "-c", "w6")
    assert result.exit_code == EXIT_OK
    assert record.betti[:7] == [1, 0, 2, 0, 2, 0, 1]
    assert record.policy == "formal-dimension+margin"


def test_catalog_parameters(runner):
    result, record = machine(runner, "betti", "-c", "cp", "-p", "n=2", "--cutoff", "4")
    assert result.exit_code == EXIT_OK
    assert record.betti == [1, 0, 1, 0, 1]


def test_profile_and_classify(runner):
    _, record = machine(runner, "profile", "-c", "w6")
    assert record.chi_formula == "6"
    assert record.chi_ge_2l is True
    _, record = machine(runner, "classify", "-c", "s3xs3")
    assert record.minimal and record.pure


def test_halperin_command(runner):
    result, record = machine(runner, "halperin", "-c", "so_q", "-p", "n=4")
    assert result.exit_code == EXIT_OK
    assert record.verdict == "holds-by-generator-count"


def test_hl_check(runner):
    _, record = machine(runner, "hl-check", "-c", "s2xs2", "--omega", "s1 + s2")
    assert record.holds is True
    _, record = machine(runner, "hl-check", "-c", "s2xs4")
    assert record.status == "none-exists"
    assert record.holds is False


def test_reorder_and_regular_sequence(runner):
    args = ["-g", "x1:2", "-g", "x2:4", "-r", "x2^2", "-r", "x1^3 + x1*x2"]
    _, record = machine(runner, "reorder", *args)
    assert record.permutation == [1, 0]
    assert record.satisfies_degree_bound
    _, record = machine(runner, "regular-seq", *args)
    assert record.regular
    assert record.quotient_dim == 6
    assert record.expected_dim == "6"


def test_fibration_command(runner):
    result, record = machine(runner, "fibration", "-c", "alternate_not_wilhelm")
    assert result.exit_code == EXIT_OK
    assert (record.fiber_dim, record.base_dim, record.gap) == (74, 72, -2)
    assert record.alternate
    assert not record.strong


def test_bound_command(runner):
    result, record = machine(runner, "bound", "--n", "40", "--k", "4")
    assert result.exit_code == EXIT_OK
    assert record.value == "8"
    assert record.cap == "44"
    assert record.generator_bound == 3


def test_feasible_chi(runner):
    _, record = machine(runner, "feasible-chi", "--n", "10")
    assert [(row.b3, row.chi) for row in record.rows] == [(0, 6), (2, 2)]
    assert record.admissible_b3 == [0, 2]


def test_catalog_list_and_show(runner):
    _, record = machine(runner, "catalog", "list")
    keys = [entry.key for entry in record.entries]
    assert "w24" in keys and "hermitian" in keys
    _, record = machine(runner, "catalog", "show", "hermitian", "-p", "family=M6")
    assert record.first_deviation == 10
    assert record.betti[10] == 2
    _, record = machine(runner, "catalog", "show", "twistor")
    assert record.model.fiber == ["u", "u'"]


def test_catalog_export_to_stdout(runner):
    result = runner.invoke(cli, ["catalog", "export", "so_q", "-p", "n=6"])
    assert result.exit_code == EXIT_OK
    exported = json.loads(result.output)
    assert exported["differential"]["x"] == "u^6 + a^2"


def test_tables_cannot_be_exported(runner):
    result, record = machine(runner, "catalog", "export", "hermitian")
    assert result.exit_code == EXIT_INPUT_ERROR
    assert record.error == "InapplicableError"


def test_parse_errors_report_positions(runner, tmp_path):
    path = tmp_path / "broken.toml"
    path.write_text('generators = { a = 2, x = 3 }\n[differential]\nx = "a^2 +"\n')
    result, record = machine(runner, "betti", "--model", str(path))
    assert result.exit_code == EXIT_INPUT_ERROR
    assert record.error == "ModelParseError"
    assert record.column == 6
    assert record.source.endswith("differential.x")


def test_invalid_models_exit_with_input_error(runner, tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text('generators = { a = 2, x = 4 }\n[differential]\nx = "a^2"\n')
    result, record = machine(runner, "validate", "--model", str(path))
    assert result.exit_code == EXIT_INPUT_ERROR
    assert not record.ok
    assert record.checks[1].status == "degree"


def test_unknown_catalog_entry(runner):
    result, record = machine(runner, "betti", "-c", "klein-bottle")
    assert result.exit_code == EXIT_INPUT_ERROR
    assert record.error == "UnknownCatalogEntry"


def test_basis_limit_is_a_resource_error(runner):
    result, record = machine(runner, "--basis-limit", "1", "betti", "-c", "w6")
    assert result.exit_code == EXIT_RESOURCE_LIMIT
    assert record.error == "ResourceLimitError"


def test_verify_paper_selection(runner):
    result, record = machine(runner, "verify-paper", "--only", "four-periodic-chi")
    assert result.exit_code == EXIT_OK
    assert record.passed
    assert [r.name for r in record.results] == ["four-periodic-chi"]


def test_verify_paper_human_summary(runner):
    result = runner.invoke(cli, ["verify-paper", "--only", "halperin"])
    assert result.exit_code == EXIT_OK
    assert "1 checks, all passed" in result.output


def test_verify_paper_reports_failures(runner, monkeypatch):
    mutated = CatalogItem("w24", lambda: _flag(8, "a^2 + a*b + b^2", "W24"), "mutated")
    monkeypatch.setitem(CATALOG, "w24", mutated)
    result, record = machine(runner, "verify-paper", "--only", "flag-manifolds")
    assert result.exit_code == EXIT_VERIFICATION_FAILED
    assert not record.passed
    assert record.failures[0].name == "flag-manifolds"
