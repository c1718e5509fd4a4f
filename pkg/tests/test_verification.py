import pytest

from sullivan_kit.catalog import CATALOG, CatalogItem
from sullivan_kit.catalog.spaces import _flag
from sullivan_kit.errors import InapplicableError
from sullivan_kit.verification import CHECKS, run_check, verify_paper

FAST_CHECKS = [name for name in CHECKS if name != "euler-bound-grid"]


def test_battery_is_registered_in_order():
    names = list(CHECKS)
    assert names[0] == "flag-manifolds"
    assert "euler-bound-grid" in names
    assert len(names) == len(set(names))
    assert all(item.citation for item in CHECKS.values())


@pytest.mark.parametrize("name", FAST_CHECKS)
def test_check_passes(name, config):
    result = run_check(name, config)
    assert result.passed, result.detail
    assert result.name == name


@pytest.mark.slow
def test_euler_bound_grid_passes(config):
    result = run_check("euler-bound-grid", config)
    assert result.passed, result.detail


def test_mutated_flag_manifold_is_caught(monkeypatch, config):
    mutated = CatalogItem("w24", lambda: _flag(8, "a^2 + a*b + b^2", "W24"), "mutated")
    monkeypatch.setitem(CATALOG, "w24", mutated)
    result = run_check("flag-manifolds", config)
    assert not result.passed
    assert "w24" in result.detail


def test_toolkit_errors_become_failures(monkeypatch, config):
    def broken():
        raise InapplicableError("no such space")

    monkeypatch.setitem(CATALOG, "w6", CatalogItem("w6", broken, "broken"))
    result = run_check("flag-manifolds", config)
    assert not result.passed
    assert "InapplicableError" in result.detail


def test_verify_paper_runs_the_selection(config):
    seen = []
    report = verify_paper(config, ["four-periodic-chi", "halperin"], seen.append)
    assert [r.name for r in report.results] == ["four-periodic-chi", "halperin"]
    assert [r.name for r in seen] == ["four-periodic-chi", "halperin"]
    assert report.passed


def test_unknown_checks_are_rejected(config):
    with pytest.raises(InapplicableError):
        verify_paper(config, ["no-such-check"])
