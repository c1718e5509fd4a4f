"""Relative Sullivan models of fibrations F → E → B.

Generators not listed as fiber generators belong to the base.
"""

from __future__ import annotations

from sullivan_kit.catalog.spaces import _power, _require
from sullivan_kit.fibrations import RelativeSullivan
from sullivan_kit.sullivan.models import SullivanAlgebra
from sullivan_kit.sullivan.morphisms import DgaMorphism


def alternate_not_wilhelm() -> RelativeSullivan:
    """Satisfies the degree-sum and regularity conditions, yet dim F > dim B."""
    return RelativeSullivan.build(
        [
            ("y1", 4),
            ("y2", 4),
            ("x1'", 39),
            ("x2'", 39),
            ("x1", 27),
            ("x2", 47),
        ],
        {
            "x1'": "y1^10",
            "x2'": "y2^10",
            "x1": "y1^7 + y2^7",
            "x2": "y1^6*y2^6",
        },
        fiber=["x1", "x2"],
        name="alternate-not-wilhelm",
    )


def weak_not_strong() -> RelativeSullivan:
    """A non-minimal total model whose transgression is not injective on W^odd."""
    return RelativeSullivan.build(
        [
            ("c", 4),
            ("x'", 7),
            ("y1", 2),
            ("y2", 2),
            ("x1", 3),
            ("x2", 3),
        ],
        {
            "x'": "c^2",
            "x1": "y1^2 + y2^2",
            "x2": "y1*y2 + c",
        },
        fiber=["y1", "y2", "x1", "x2"],
        name="weak-not-strong",
    )


def minimal_model_weak_not_strong() -> tuple[SullivanAlgebra, DgaMorphism]:
    """The minimal model of the total space above and a quasi-isomorphism into it."""
    minimal = SullivanAlgebra.build(
        [("y1", 2), ("y2", 2), ("x1", 3), ("x'", 7)],
        {"x1": "y1^2 + y2^2", "x'": "y1^2*y2^2"},
        name="weak-not-strong minimal",
    )
    total = weak_not_strong().total
    morphism = DgaMorphism.build(
        minimal,
        total,
        {"y1": "y1", "y2": "y2", "x1": "x1", "x'": "x2*y1*y2 - x2*c + x'"},
    )
    return minimal, morphism


def unit_tangent_s4() -> RelativeSullivan:
    """S³ → T₁S⁴ → S⁴, Euler class 2."""
    return RelativeSullivan.build(
        [("v", 4), ("v'", 7), ("w", 3)],
        {"v'": "v^2", "w": "2*v"},
        fiber=["w"],
        name="T1S4",
    )


def quaternionic_hopf(n: int = 1) -> RelativeSullivan:
    """S³ → S^(4n+3) → HPⁿ."""
    _require(n >= 1, f"HP^n needs n ≥ 1, got {n}")
    return RelativeSullivan.build(
        [("v", 4), ("v'", 4 * n + 3), ("w", 3)],
        {"v'": _power("v", n + 1), "w": "v"},
        fiber=["w"],
        name=f"S{4 * n + 3} over HP{n}",
    )


def twistor(n: int = 1) -> RelativeSullivan:
    """S² → CP^(2n+1) → HPⁿ."""
    _require(n >= 1, f"HP^n needs n ≥ 1, got {n}")
    return RelativeSullivan.build(
        [("v", 4), ("v'", 4 * n + 3), ("u", 2), ("u'", 3)],
        {"v'": _power("v", n + 1), "u'": "u^2 - v"},
        fiber=["u", "u'"],
        name=f"CP{2 * n + 1} over HP{n}",
    )


def flag_w6() -> RelativeSullivan:
    """S² → W⁶ → CP²."""
    return RelativeSullivan.build(
        [("b", 2), ("y", 5), ("a", 2), ("x", 3)],
        {"y": "b^3", "x": "a^2 + a*b + b^2"},
        fiber=["a", "x"],
        name="W6 over CP2",
    )


def trivial_product() -> RelativeSullivan:
    """S⁴ × S² with the projection to S⁴."""
    return RelativeSullivan.build(
        [("v", 4), ("v'", 7), ("u", 2), ("u'", 3)],
        {"v'": "v^2", "u'": "u^2"},
        fiber=["u", "u'"],
        name="S4xS2",
    )


def cp_over_sphere(n: int, deg_a: int, k: int = 1) -> RelativeSullivan:
    """A CP^((n − deg a)/2)-fibration over S^(deg a) with total formal dimension n."""
    _require(n > 0 and n % 2 == 0, f"n = {n} must be positive and even")
    _require(deg_a >= 2 and deg_a % 2 == 0, f"deg a = {deg_a} must be even and positive")
    _require(2 * deg_a <= n + 2, f"deg a = {deg_a} exceeds (n + 2)/2")
    _require(k != 0, "the twisting coefficient must be nonzero")
    top = (n - deg_a + 2) // 2
    low = (n - 2 * deg_a + 2) // 2
    model = SullivanAlgebra.build(
        [("a", deg_a), ("x", 2 * deg_a - 1), ("u", 2), ("y", n - deg_a + 1)]
    )
    a, u = model.generator("a"), model.generator("u")
    zero = model.algebra.zero()
    total = model.with_differential(
        (zero, a**2, zero, u**top + a * u**low * k), name=f"CP{top - 1} over S{deg_a}"
    )
    return RelativeSullivan(total, frozenset({"u", "y"}))
