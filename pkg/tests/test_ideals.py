import random
from fractions import Fraction

import pytest

from sullivan_kit.algebra.generators import FreeAlgebra
from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.catalog import catalog_get
from sullivan_kit.errors import InapplicableError, ModelValidationError
from sullivan_kit.halperin import presentation_of
from sullivan_kit.ideals import IdealBasis, in_ideal, is_regular_sequence, reorder_xrem
from sullivan_kit.sullivan.cohomology import cohomology, formal_dimension
from sullivan_kit.verification import random_regular_sequence


@pytest.fixture
def plane() -> FreeAlgebra:
    return FreeAlgebra.of([("a", 2), ("b", 2)])


def test_membership_and_normal_form(plane):
    ideal = IdealBasis.generate([plane.parse("a^2"), plane.parse("b^2")])
    assert in_ideal(plane.parse("a^2*b"), ideal)
    assert not in_ideal(plane.parse("a*b"), ideal)
    assert ideal.normal_form(plane.parse("a^2 + a*b")) == plane.parse("a*b")
    assert ideal.is_zero_dimensional()
    assert ideal.quotient_dimension() == 4
    assert len(ideal.standard_monomials(2)) == 2


@pytest.mark.parametrize(
    "element, generators, expected",
    [
        ("b^3", ["a"], False),
        ("a^2 + a*b + b^2", ["a", "b"], True),
        ("a^2 + a*b + b^2", ["b^3"], False),
    ],
)
def test_membership_examples(plane, element, generators, expected):
    ideal = IdealBasis.generate([plane.parse(g) for g in generators], algebra=plane)
    assert in_ideal(plane.parse(element), ideal) is expected


def test_membership_grows_with_the_ideal(plane):
    smaller = [plane.parse("a^2 + b^2")]
    larger = smaller + [plane.parse("a*b^2"), plane.parse("b^4")]
    small, large = IdealBasis.generate(smaller), IdealBasis.generate(larger)
    for degree in range(0, 9, 2):
        for monomial in plane.basis(degree):
            element = smaller[0] * Polynomial(plane, {monomial: Fraction(1)})
            assert in_ideal(element, small)
            assert in_ideal(element, large)
    assert in_ideal(plane.parse("a*b^2"), large)
    assert not in_ideal(plane.parse("a*b^2"), small)


def test_membership_needs_homogeneous_elements(plane):
    ideal = IdealBasis.generate([plane.parse("a^2")])
    with pytest.raises(ModelValidationError):
        in_ideal(plane.parse("a + a^2"), ideal)


def test_infinite_quotient(plane):
    ideal = IdealBasis.generate([plane.parse("a^2")])
    assert not ideal.contains(plane.parse("b^5"))
    assert not ideal.is_zero_dimensional()


def test_regular_sequence(plane):
    report = is_regular_sequence(
        plane.generators, [plane.parse("a^2 + a*b + b^2"), plane.parse("b^3")], plane
    )
    assert report.regular
    assert report.quotient_dim == 6
    assert report.expected_dim == 6


def test_non_regular_sequence(plane):
    report = is_regular_sequence(
        plane.generators, [plane.parse("a^2"), plane.parse("a*b")], plane
    )
    assert not report.regular
    assert report.quotient_dim is None
    assert report.expected_dim == 4


def test_relation_count_must_match(plane):
    with pytest.raises(ModelValidationError) as error:
        is_regular_sequence(plane.generators, [plane.parse("a^2")], plane)
    assert error.value.invariant == "complete-intersection"


def test_reorder_pairs_by_the_last_generator_first():
    algebra = FreeAlgebra.of([("x1", 2), ("x2", 4)])
    ys = [algebra.parse("x2^2"), algebra.parse("x1^3 + x1*x2")]
    pairing = reorder_xrem(algebra.generators, ys, algebra)
    assert pairing.permutation == (1, 0)
    assert pairing.degree_pairs == ((2, 6), (4, 8))
    assert pairing.satisfies_degree_bound


def test_reorder_needs_sorted_generators():
    algebra = FreeAlgebra.of([("x2", 4), ("x1", 2)])
    ys = [algebra.parse("x2^2"), algebra.parse("x1^2")]
    with pytest.raises(ModelValidationError):
        reorder_xrem(algebra.generators, ys, algebra)


def test_reorder_needs_a_regular_sequence(plane):
    with pytest.raises(InapplicableError):
        reorder_xrem(plane.generators, [plane.parse("a^2"), plane.parse("a*b")], plane)


def test_random_regular_sequences_reorder():
    rng = random.Random(11)
    for _ in range(25):
        algebra, xs, ys, expected = random_regular_sequence(rng)
        pairing = reorder_xrem(xs, ys, algebra)
        assert pairing.satisfies_degree_bound
        assert sorted(pairing.permutation) == list(range(len(xs)))
        assert is_regular_sequence(xs, ys, algebra).quotient_dim == expected
        assert is_regular_sequence(xs, ys, algebra).expected_dim == Fraction(expected)


@pytest.mark.parametrize(
    "generators, relations, permutation, pairs",
    [
        ([("a", 2), ("b", 2)], ["a^2 + a*b + b^2", "b^3"], (0, 1), ((2, 4), (2, 6))),
        ([("a", 2)], ["a^3"], (0,), ((2, 6),)),
        ([("a", 2), ("b", 4)], ["b^2 + a^4", "a^3"], (1, 0), ((2, 6), (4, 8))),
    ],
)
def test_reorder_examples(generators, relations, permutation, pairs):
    algebra = FreeAlgebra.of(generators)
    pairing = reorder_xrem(algebra.generators, [algebra.parse(r) for r in relations], algebra)
    assert pairing.permutation == permutation
    assert pairing.degree_pairs == pairs


def test_random_sequences_are_not_triangular():
    rng = random.Random(3)
    sizes = []
    for _ in range(60):
        _, _, ys, _ = random_regular_sequence(rng)
        assert all(y.degree is not None and y.degree <= 12 for y in ys)
        sizes.extend(len(y.terms) for y in ys)
    assert max(sizes) > 2


@pytest.mark.parametrize(
    "key", ["w6", "w12", "w24", "eschenburg", "cp", "hp", "so_q", "cor02", "s2xs2", "s2xs4"]
)
def test_quotient_dimension_is_total_cohomology(key, config):
    model = catalog_get(key).model
    presentation = presentation_of(model)
    report = is_regular_sequence(
        presentation.even_gens, presentation.relations, presentation.algebra
    )
    betti = cohomology(model, cutoff=formal_dimension(model), config=config)
    assert report.regular
    assert report.quotient_dim == betti.total()
