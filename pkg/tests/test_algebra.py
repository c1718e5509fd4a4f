from fractions import Fraction

import pytest
import sympy

from sullivan_kit.algebra.bases import basis_monomials
from sullivan_kit.algebra.generators import FreeAlgebra, Generator
from sullivan_kit.algebra.linalg import left_nullspace, nullspace, rank
from sullivan_kit.catalog import CATALOG, catalog_get
from sullivan_kit.errors import (
    GeneratorMismatchError,
    ModelValidationError,
    ResourceLimitError,
)


@pytest.fixture
def algebra() -> FreeAlgebra:
    return FreeAlgebra.of([("a", 2), ("b", 2), ("x", 3), ("y", 5)])


def test_odd_generators_anticommute(algebra):
    x, y = algebra.generator("x"), algebra.generator("y")
    assert x * y == -(y * x)
    assert x * x == 0


def test_even_generators_commute(algebra):
    a, x = algebra.generator("a"), algebra.generator("x")
    assert a * x == x * a
    assert (a + x) ** 2 == a**2 + 2 * a * x


def test_degrees_and_homogeneity(algebra):
    p = algebra.parse("a^2 + a*b")
    assert p.degree == 4
    assert p.is_homogeneous()
    q = algebra.parse("a + x")
    assert not q.is_homogeneous()
    assert q.degree is None
    assert q.degrees == {2, 3}


def test_canonical_rendering_parses_back(algebra):
    p = algebra.parse("b^2 + a*b + a^2")
    assert str(p) == "a^2 + a*b + b^2"
    assert algebra.parse(str(p)) == p
    q = algebra.parse("-3/2*a*x + y")
    assert algebra.parse(str(q)) == q


def test_linear_part(algebra):
    p = algebra.parse("a + a^2 + 3*b*x")
    assert p.linear_part() == algebra.parse("a")


def test_basis_counts(algebra):
    assert len(algebra.basis(0)) == 1
    assert len(algebra.basis(1)) == 0
    # a^2, ab, b^2
    assert len(algebra.basis(4)) == 3
    # ax, bx; x^2 vanishes
    assert len(algebra.basis(5)) == 3
    assert len(algebra.basis(6)) == 4


@pytest.mark.parametrize(
    "key", [key for key, item in sorted(CATALOG.items()) if item.kind != "table"]
)
def test_basis_counts_match_the_generating_function(key):
    model = catalog_get(key).model
    if CATALOG[key].kind == "relative":
        model = model.total
    generators = model.algebra.generators
    t = sympy.symbols("t")
    series = sympy.prod(
        (1 + t**g.degree) if g.is_odd else 1 / (1 - t**g.degree) for g in generators
    )
    expansion = sympy.series(series, t, 0, 31).removeO()
    for m in range(31):
        assert len(basis_monomials(generators, m)) == expansion.coeff(t, m), f"degree {m}"


def test_basis_limit_raises(algebra):
    with pytest.raises(ResourceLimitError):
        algebra.basis(20, limit=3)


def test_mixing_algebras_is_rejected(algebra):
    other = FreeAlgebra.of([("a", 2)])
    with pytest.raises(GeneratorMismatchError):
        algebra.generator("a") + other.generator("a")


def test_generator_declarations_are_checked():
    with pytest.raises(ModelValidationError):
        Generator("a", 0)
    with pytest.raises(ModelValidationError):
        Generator("2a", 2)
    with pytest.raises(ModelValidationError):
        FreeAlgebra.of([("a", 2), ("a", 4)])


def test_unknown_generator_lookup(algebra):
    with pytest.raises(ModelValidationError) as error:
        algebra.index("q")
    assert error.value.invariant == "declared-generators"


def test_rank_and_nullspace():
    rows = [{0: Fraction(1), 1: Fraction(1)}, {0: Fraction(2), 1: Fraction(2)}]
    assert rank(rows, 2) == 1
    (kernel,) = nullspace(rows, 2)
    assert kernel == {0: Fraction(-1), 1: Fraction(1)}
    (relation,) = left_nullspace(rows, 2)
    assert relation == {0: Fraction(-2), 1: Fraction(1)}


def test_nullspace_of_empty_rows_is_everything():
    assert nullspace([], 3) == [{0: 1}, {1: 1}, {2: 1}]
    assert rank([], 3) == 0
