import pytest

from sullivan_kit.catalog import spaces
from sullivan_kit.catalog.relative import minimal_model_weak_not_strong, weak_not_strong
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import (
    InapplicableError,
    ModelValidationError,
    ResourceLimitError,
    UnsupportedShapeError,
)
from sullivan_kit.sullivan.classify import (
    classify,
    is_minimal,
    is_pure,
    is_two_stage,
    pure_associate,
)
from sullivan_kit.sullivan.cohomology import (
    CochainComplex,
    CutoffPolicy,
    cohomology,
    default_cutoff,
    formal_dimension,
    homotopy_euler_characteristic,
    indecomposables,
)
from sullivan_kit.sullivan.models import GeneratorStatus, SullivanAlgebra, validate
from sullivan_kit.sullivan.morphisms import DgaMorphism, verify_quasi_iso


def test_valid_model(w6):
    report = validate(w6)
    assert report.ok
    assert report.failures == []


def test_wrong_degree_is_reported():
    model = SullivanAlgebra.build([("a", 2), ("x", 4)], {"x": "a^2"})
    (failure,) = validate(model).failures
    assert failure.name == "x"
    assert failure.status is GeneratorStatus.DEGREE


def test_d_squared_is_reported():
    model = SullivanAlgebra.build(
        [("a", 2), ("b", 3), ("c", 5)], {"b": "a^2", "c": "a*b"}
    )
    (failure,) = validate(model).failures
    assert failure.name == "c"
    assert failure.status is GeneratorStatus.D_SQUARED
    with pytest.raises(ModelValidationError) as error:
        validate(model).raise_for_failures()
    assert error.value.invariant == "d-squared"


def test_leibniz_rule_signs(w6):
    x, y = w6.generator("x"), w6.generator("y")
    assert w6.d(x * y) == w6.d_of("x") * y - x * w6.d_of("y")
    a = w6.generator("a")
    assert w6.d(a * x) == a * w6.d_of("x")


def test_flag_manifold_cohomology(w6, config):
    betti = cohomology(w6, cutoff=6, config=config)
    assert str(betti) == "1 0 2 0 2 0 1"
    assert betti.policy is CutoffPolicy.USER
    assert betti.euler_characteristic() == 6


def test_default_cutoff_covers_the_margin(config):
    cp3 = spaces.cp(3)
    assert formal_dimension(cp3) == 6
    betti = cohomology(cp3, config=config)
    assert betti.policy is CutoffPolicy.FORMAL_DIMENSION
    assert betti.cutoff == 6 + config.cohomology_margin
    assert betti.dims[:7] == (1, 0, 1, 0, 1, 0, 1)
    assert not any(betti.dims[7:])
    assert betti.top_degree == 6


def test_default_cutoff_needs_an_elliptic_shape(config):
    polynomial_ring = SullivanAlgebra.build([("a", 2)])
    assert homotopy_euler_characteristic(polynomial_ring) == 1
    with pytest.raises(InapplicableError):
        default_cutoff(polynomial_ring, config)
    assert cohomology(polynomial_ring, cutoff=6, config=config).dims == (1, 0, 1, 0, 1, 0, 1)


def test_basis_limit_stops_cohomology(w6):
    with pytest.raises(ResourceLimitError):
        cohomology(w6, cutoff=6, config=ToolkitConfig(basis_limit=1))


def test_d_squared_vanishes_per_degree(w6, config):
    complex_ = CochainComplex(w6, config)
    assert all(complex_.d_squared_vanishes(degree) for degree in range(10))


def test_indecomposables(w6, config):
    assert indecomposables(spaces.cp(3), 6, config) == {2: 1}
    assert indecomposables(w6, 6, config) == {2: 2}
    assert indecomposables(spaces.s3xs3(), 6, config) == {3: 2}


def test_classification(w6):
    result = classify(w6)
    assert result.is_minimal and result.is_pure
    assert result.spherical_dim == 2
    total = weak_not_strong().total
    assert not is_minimal(total)


def test_pure_associate(two_stage_not_pure):
    assert is_two_stage(two_stage_not_pure)
    assert not is_pure(two_stage_not_pure)
    pure = pure_associate(two_stage_not_pure)
    assert is_pure(pure)
    assert pure.d_of("x") == 0
    assert pure.d_of("x'") == pure.parse("a^4")


def test_pure_associate_is_idempotent(two_stage_not_pure, w6):
    pure = pure_associate(two_stage_not_pure)
    assert pure_associate(pure) == pure
    assert pure_associate(w6) == w6


def test_pure_associate_needs_two_stages():
    model = SullivanAlgebra.build(
        [("a", 2), ("b", 3), ("c", 3), ("f", 6)],
        {"b": "a^2", "c": "a^2", "f": "a^2*b - a^2*c"},
    )
    assert validate(model).ok
    with pytest.raises(UnsupportedShapeError):
        pure_associate(model)


def test_identity_is_a_quasi_isomorphism(w6, config):
    identity = DgaMorphism.build(w6, w6, {name: name for name in w6.algebra.names})
    assert identity.commutes_with_differentials()
    assert verify_quasi_iso(identity, 8, config)


def test_zero_map_is_not_a_quasi_isomorphism(config):
    s2 = spaces.sphere(2)
    zero = DgaMorphism.build(s2, s2, {})
    assert zero.commutes_with_differentials()
    assert not verify_quasi_iso(zero, 4, config)


def test_morphisms_preserve_degree():
    s2 = spaces.sphere(2)
    with pytest.raises(ModelValidationError):
        DgaMorphism.build(s2, s2, {"s": "s^2"})


def test_minimal_model_of_a_non_minimal_total_space(config):
    minimal, morphism = minimal_model_weak_not_strong()
    assert is_minimal(minimal)
    assert verify_quasi_iso(morphism, 10, config)
