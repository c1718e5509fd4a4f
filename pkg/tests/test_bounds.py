from fractions import Fraction
from math import prod

import pytest

from sullivan_kit.bounds import (
    BoundQuery,
    Case,
    Optimum,
    SearchMode,
    Threshold,
    classify_case,
    classify_case_from_model,
    closed_form_cap,
    generator_bound,
    optimize_chi,
    relaxed_optimum,
    sphere_optimum_expected,
)
from sullivan_kit.catalog import spaces
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import (
    InapplicableError,
    ModelValidationError,
    ResourceLimitError,
    UnsupportedShapeError,
)


def test_query_validation():
    assert BoundQuery(40, 4).c == 11
    with pytest.raises(ModelValidationError):
        BoundQuery(41, 4)
    with pytest.raises(ModelValidationError):
        BoundQuery(40, 1)


def test_thresholds():
    query = BoundQuery(60, 3)
    assert query.smallest_degree == 22
    assert BoundQuery(60, 3, threshold=Threshold.C).smallest_degree == 22
    assert BoundQuery(40, 4, threshold=Threshold.C).smallest_degree == 12
    assert BoundQuery(40, 4).smallest_degree == 12


@pytest.mark.parametrize(
    "n, k, case, expected",
    [
        (60, 3, Case.SPHERE, 2),
        (60, 3, Case.CP, 2),
        (40, 4, Case.S2xHP, 4),
    ],
)
def test_generator_bound(n, k, case, expected):
    assert generator_bound(BoundQuery(n, k, case)) == expected


def test_generator_bound_grows_with_k():
    for n in range(20, 201, 20):
        for case in Case:
            bounds = [generator_bound(BoundQuery(n, k, case)) for k in range(2, 9)]
            assert bounds == sorted(bounds)


def test_closed_form_cap():
    assert closed_form_cap(40, 4) == 44
    assert closed_form_cap(60, 3) == 42
    assert all(closed_form_cap(n, 4) == n + 4 for n in range(20, 201, 2))


@pytest.mark.slow
@pytest.mark.parametrize("k", range(2, 7))
def test_sphere_optimum_over_the_grid(k, config):
    for n in range(20, 201, 2):
        query = BoundQuery(n, k)
        optimum = optimize_chi(query, config)
        assert optimum.value == 2 ** (k - 1), f"n={n}"
        assert optimum.value == sphere_optimum_expected(query)


@pytest.mark.parametrize("n, k, expected", [(60, 3, 4), (40, 4, 8)])
def test_sphere_optimum(n, k, expected, config):
    query = BoundQuery(n, k)
    optimum = optimize_chi(query, config)
    assert optimum.value == expected
    assert optimum.value == sphere_optimum_expected(query)
    assert optimum.value <= closed_form_cap(n, k)
    assert optimum.value <= relaxed_optimum(query)
    assert optimum.value == Fraction(
        prod(y for _, y in optimum.witness), prod(x for x, _ in optimum.witness)
    )


def test_product_case_optimum(config):
    optimum = optimize_chi(BoundQuery(40, 4, Case.S2xHP), config)
    assert optimum.value == 32
    assert optimum.value <= closed_form_cap(40, 4)


def test_displayed_mode_relaxes_the_search(config):
    realizable = optimize_chi(BoundQuery(60, 3), config)
    displayed = optimize_chi(BoundQuery(60, 3, mode=SearchMode.DISPLAYED), config)
    assert displayed.value >= realizable.value


@pytest.mark.parametrize("n", [20, 40, 60])
@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("case", list(Case))
def test_optimum_never_exceeds_the_cap(n, k, case, config):
    query = BoundQuery(n, k, case)
    try:
        optimum = optimize_chi(query, config)
    except InapplicableError:
        return
    assert optimum.value <= closed_form_cap(n, k)


def test_search_domain_is_bounded():
    with pytest.raises(ResourceLimitError):
        optimize_chi(BoundQuery(402, 3), ToolkitConfig())
    with pytest.raises(ResourceLimitError):
        optimize_chi(BoundQuery(40, 9), ToolkitConfig())


def test_optimum_checks_its_witness():
    with pytest.raises(ValueError):
        Optimum(Fraction(5), ((2, 4),), 1)


@pytest.mark.parametrize(
    "betti, c, cup_square_zero, expected",
    [
        ([1, 0, 0, 0, 0], 4, None, Case.SPHERE),
        ([1, 0, 1, 0, 1, 0, 1], 6, None, Case.CP),
        ([1, 0, 1, 0, 1, 0, 1], 6, True, Case.S2xHP),
        ([1, 0, 0, 0, 1, 0, 0, 0, 1], 8, None, Case.HP),
        ([1, 0, 1, 1, 1], 4, None, Case.S2xHP),
    ],
)
def test_classify_case(betti, c, cup_square_zero, expected):
    assert classify_case(betti, c, cup_square_zero) is expected


def test_classify_case_rejects_other_patterns():
    with pytest.raises(UnsupportedShapeError):
        classify_case([1, 1, 0, 0, 0], 4)
    with pytest.raises(InapplicableError):
        classify_case([1, 0, 1], 4)


def test_classify_case_from_models(config):
    assert classify_case_from_model(spaces.cp(8), 10, config) is Case.CP
    assert classify_case_from_model(spaces.hp(4), 10, config) is Case.HP
    assert classify_case_from_model(spaces.sphere(24), 10, config) is Case.SPHERE
