from fractions import Fraction

import pytest

from sullivan_kit.catalog import relative
from sullivan_kit.errors import InapplicableError, MalformedRelativeModelError
from sullivan_kit.fibrations import (
    RelativeSullivan,
    SinglyGeneratedCase,
    base_model,
    check_versions,
    euler_multiplicativity,
    fiber_model,
    singly_generated_case,
    transgression,
    wilhelm_gap,
)


def test_base_and_fiber_models():
    twistor = relative.twistor(1)
    base = base_model(twistor)
    fiber = fiber_model(twistor)
    assert base.algebra.names == ("v", "v'")
    assert fiber.algebra.names == ("u", "u'")
    # the base term of du' is dropped in the fiber
    assert fiber.d_of("u'") == fiber.parse("u^2")


def test_base_differential_must_stay_in_the_base():
    with pytest.raises(MalformedRelativeModelError) as error:
        RelativeSullivan.build(
            [("v", 4), ("u", 2), ("v'", 7)], {"v'": "v*u^2"}, fiber=["u"]
        )
    assert error.value.invariant == "base-closed"


def test_alternate_version_without_the_gap(config):
    fibration = relative.alternate_not_wilhelm()
    versions = check_versions(fibration, config)
    alternate = versions.alternate
    assert (alternate.fiber_odd_degree_sum, alternate.base_odd_degree_sum) == (74, 78)
    assert alternate.degree_sums_hold
    assert alternate.regular_sequence
    assert alternate.intersection_trivial
    assert alternate.holds
    assert not versions.strong
    gap = wilhelm_gap(fibration, config)
    assert (gap.fiber_dim, gap.base_dim, gap.gap) == (74, 72, -2)


def test_weak_version_without_the_strong_one(config):
    fibration = relative.weak_not_strong()
    versions = check_versions(fibration, config)
    assert versions.weak
    assert not versions.strong
    report = versions.transgression
    assert report.map["x1"] == 0
    assert str(report.map["x2"]) == "c"
    assert report.kernel_odd_basis == ({"x1": Fraction(1)},)
    assert versions.notes


def test_transgression_is_injective_for_the_unit_tangent_bundle():
    report = transgression(relative.unit_tangent_s4())
    assert report.injective_on_odd
    assert str(report.map["w"]) == "2*v"


def test_gap_matches_the_odd_fiber_generators(config):
    gap = wilhelm_gap(relative.unit_tangent_s4(), config)
    assert (gap.base_dim, gap.fiber_dim, gap.gap) == (4, 3, 1)
    assert gap.lemma02_bound == 1
    assert gap.f0_bound is None


def test_gap_for_positively_elliptic_fibers(config):
    gap = wilhelm_gap(relative.twistor(1), config)
    assert gap.gap == 2
    assert gap.f0_bound == 2


def test_gap_can_be_negative_for_cp_over_a_sphere(config):
    gap = wilhelm_gap(relative.cp_over_sphere(12, 4, 1), config)
    assert (gap.base_dim, gap.fiber_dim) == (4, 8)
    assert gap.gap == -4


@pytest.mark.parametrize(
    "fibration, chis",
    [
        (relative.twistor(1), (4, 2, 2)),
        (relative.flag_w6(), (6, 3, 2)),
        (relative.trivial_product(), (4, 2, 2)),
        (relative.quaternionic_hopf(1), (0, 2, 0)),
    ],
)
def test_euler_characteristic_is_multiplicative(fibration, chis, config):
    check = euler_multiplicativity(fibration, config)
    assert (check.total, check.base, check.fiber) == chis
    assert check.holds


def test_singly_generated_totals(config):
    twistor = singly_generated_case(relative.twistor(1), config)
    assert twistor.case is SinglyGeneratedCase.EVEN_CONCENTRATED
    assert twistor.generator_degree == 2
    hopf = singly_generated_case(relative.quaternionic_hopf(1), config)
    assert hopf.case is SinglyGeneratedCase.ODD_SPHERE
    assert hopf.generator_degree == 7
    flag = singly_generated_case(relative.flag_w6(), config)
    assert flag.case is SinglyGeneratedCase.NOT_SINGLY_GENERATED
    assert flag.generator_degree is None


def test_trivial_product_is_neither_weak_nor_strong(config):
    versions = check_versions(relative.trivial_product(), config)
    assert not versions.weak
    assert not versions.strong


def test_gap_needs_elliptic_parts(config):
    fibration = RelativeSullivan.build(
        [("v", 4), ("u", 2)], {}, fiber=["u"], name="polynomial"
    )
    with pytest.raises(InapplicableError):
        wilhelm_gap(fibration, config)
