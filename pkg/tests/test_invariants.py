from fractions import Fraction

import pytest

from sullivan_kit.catalog import spaces
from sullivan_kit.errors import InapplicableError, ModelValidationError
from sullivan_kit.invariants import (
    LefschetzStatus,
    admissible_b3,
    check_chi_ge_2l,
    euler_formula,
    find_lefschetz_class,
    four_periodic_chi,
    friedlander_halperin,
    hard_lefschetz_check,
    long_word_degrees,
    profile,
    six_dimensional_b3,
    six_dimensional_chi,
    spherical_bound_check,
)


def test_flag_manifold_profile(w6, config):
    result = profile(w6, config)
    assert result.formal_dim == 6
    assert result.chi_formula == 6
    assert result.chi_homological == 6
    assert result.chi_pi == 0
    assert result.generator_count == 2
    assert result.spherical_dim == 2
    assert result.total_dimension == 6
    assert check_chi_ge_2l(result)


def test_euler_formula_needs_a_pure_balanced_model():
    assert euler_formula(spaces.s3xs3()) is None
    assert euler_formula(spaces.hp(2)) == Fraction(12, 4)


def test_chi_bound_needs_positive_chi(config):
    result = profile(spaces.s3xs3(), config)
    assert result.chi_homological == 0
    with pytest.raises(InapplicableError):
        check_chi_ge_2l(result)


def test_spherical_bound(config):
    assert spherical_bound_check(spaces.s2xs2(), config)
    assert spherical_bound_check(spaces.cp(4), config)


def test_hard_lefschetz_on_projective_space(config):
    cp3 = spaces.cp(3)
    assert hard_lefschetz_check(cp3, cp3.generator("x"), config)


def test_hard_lefschetz_depends_on_the_class(config):
    model = spaces.s2xs2()
    assert hard_lefschetz_check(model, model.parse("s1 + s2"), config)
    assert not hard_lefschetz_check(model, model.parse("s1"), config)


def test_hard_lefschetz_rejects_bad_input(config):
    cp3 = spaces.cp(3)
    with pytest.raises(ModelValidationError):
        hard_lefschetz_check(cp3, cp3.parse("x^2"), config)
    s3 = spaces.sphere(3)
    with pytest.raises(InapplicableError):
        find_lefschetz_class(s3, config)


def test_lefschetz_search(w6, config):
    found = find_lefschetz_class(w6, config)
    assert found.status is LefschetzStatus.FOUND
    assert found.omega is not None and found.omega.degree == 2
    assert hard_lefschetz_check(w6, found.omega, config)
    assert find_lefschetz_class(spaces.cp(2), config).status is LefschetzStatus.FOUND
    missing = find_lefschetz_class(spaces.s2xs4(), config)
    assert missing.status is LefschetzStatus.NONE_EXISTS
    assert missing.omega is None


@pytest.mark.parametrize("n", [10, 14, 30, 50])
def test_four_periodic_chi(n):
    assert four_periodic_chi(n, 0).chi == (n + 2) // 2
    assert four_periodic_chi(n, 2).chi == 2
    negative = four_periodic_chi(n, 4)
    assert negative.chi < 0
    assert not negative.positive
    assert admissible_b3(n) == [0, 2]


def test_four_periodic_chi_rejects_bad_input():
    with pytest.raises(ModelValidationError):
        four_periodic_chi(10, 1)
    with pytest.raises(InapplicableError):
        four_periodic_chi(12, 0)
    with pytest.raises(InapplicableError):
        four_periodic_chi(6, 0)


def test_six_dimensional_case():
    assert six_dimensional_chi(1, 0) == 4
    assert six_dimensional_chi(1, 2) == 2
    assert six_dimensional_b3() == [0, 2]


def test_long_word_degrees():
    words = long_word_degrees([2], 8)
    assert [d for d in range(9) if (words >> d) & 1] == [4, 6, 8]


@pytest.mark.parametrize(
    "xs, ys, expected",
    [
        ([2], [4], True),
        ([2], [3], False),
        ([4], [6], False),
        ([2, 2], [4, 6], True),
        ([2, 4], [4, 6], False),
        ([2, 4], [6, 8], True),
        ([2], [4, 6], False),
    ],
)
def test_friedlander_halperin(xs, ys, expected):
    assert friedlander_halperin(xs, ys) is expected
