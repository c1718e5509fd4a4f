"""Minimal models of the closed manifolds used throughout the toolkit."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sullivan_kit.algebra.polynomials import render
from sullivan_kit.errors import InapplicableError
from sullivan_kit.sullivan.models import SullivanAlgebra


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InapplicableError(message)


def _power(name: str, exponent: int) -> str:
    if exponent == 0:
        return "1"
    return name if exponent == 1 else f"{name}^{exponent}"


def sphere(d: int, name: str = "s") -> SullivanAlgebra:
    _require(d >= 1, f"sphere dimension must be positive, got {d}")
    if d % 2:
        return SullivanAlgebra.build([(name, d)], name=f"S{d}")
    return SullivanAlgebra.build(
        [(name, d), (f"{name}'", 2 * d - 1)], {f"{name}'": f"{name}^2"}, name=f"S{d}"
    )


def cp(n: int) -> SullivanAlgebra:
    _require(n >= 1, f"CP^n needs n ≥ 1, got {n}")
    return SullivanAlgebra.build(
        [("x", 2), ("y", 2 * n + 1)], {"y": _power("x", n + 1)}, name=f"CP{n}"
    )


def hp(n: int) -> SullivanAlgebra:
    _require(n >= 1, f"HP^n needs n ≥ 1, got {n}")
    return SullivanAlgebra.build(
        [("v", 4), ("y", 4 * n + 3)], {"y": _power("v", n + 1)}, name=f"HP{n}"
    )


def _flag(degree: int, relation: str, name: str) -> SullivanAlgebra:
    return SullivanAlgebra.build(
        [("a", degree), ("b", degree), ("x", 2 * degree - 1), ("y", 3 * degree - 1)],
        {"x": relation, "y": "b^3"},
        name=name,
    )


def w6() -> SullivanAlgebra:
    """The flag manifold SU(3)/T²."""
    return _flag(2, "a^2 + a*b + b^2", "W6")


def w12() -> SullivanAlgebra:
    """Sp(3)/Sp(1)³."""
    return _flag(4, "a^2 + a*b + b^2", "W12")


def w24() -> SullivanAlgebra:
    """F₄/Spin(8); the generators are (2e(E₁) + e(E₂))/3 and e(E₂) integrally."""
    return _flag(8, "a^2 - a*b + b^2", "W24")


def eschenburg() -> SullivanAlgebra:
    return _flag(2, "a^2 + a*b - b^2", "Eschenburg")


def so_q(n: int) -> SullivanAlgebra:
    """SO(n+2)/SO(2)×SO(n); rationally CP^n for odd n."""
    _require(n >= 2, f"so_q needs n ≥ 2, got {n}")
    if n % 2:
        model = cp(n)
        return model.with_differential(model.differential, name=f"SO({n + 2})/SO(2)xSO({n})")
    return SullivanAlgebra.build(
        [("u", 2), ("a", n), ("x", 2 * n - 1), ("y", n + 1)],
        {"x": f"a^2 + {_power('u', n)}", "y": "a*u"},
        name=f"SO({n + 2})/SO(2)xSO({n})",
    )


def cor02_family(
    n: int,
    deg_a: int,
    k1: Fraction | int = 0,
    k2: Fraction | int = 0,
    k3: Fraction | int = 0,
) -> SullivanAlgebra:
    """Λ⟨u, a, x, y⟩ with dx = a² + k₁au^(deg a/2) + k₂u^(deg a).

    dy = au^((n − 2 deg a + 2)/2) + k₃u^((n − deg a + 2)/2), formal dimension n.
    """
    _require(n > 0 and n % 2 == 0, f"n = {n} must be positive and even")
    _require(deg_a % 2 == 0, f"deg a = {deg_a} must be even")
    _require(4 * deg_a >= n + 4, f"deg a = {deg_a} must be at least n/4 + 1")
    _require(2 * deg_a <= n + 2, f"deg a = {deg_a} exceeds (n + 2)/2")
    deg_x = 2 * deg_a - 1
    deg_y = n + 1 - deg_a
    _require(deg_x != deg_y, f"deg x = deg y = {deg_x} is excluded")
    model = SullivanAlgebra.build([("u", 2), ("a", deg_a), ("x", deg_x), ("y", deg_y)])
    u, a = model.generator("u"), model.generator("a")
    dx = a**2 + a * u ** (deg_a // 2) * Fraction(k1) + u**deg_a * Fraction(k2)
    dy = a * u ** ((n - 2 * deg_a + 2) // 2) + u ** ((n - deg_a + 2) // 2) * Fraction(k3)
    zero = model.algebra.zero()
    return model.with_differential(
        (zero, zero, dx, dy), name=f"cor02(n={n}, deg a={deg_a}, dx={render(dx)})"
    )


def sphere_product(degrees: Sequence[int]) -> SullivanAlgebra:
    _require(len(degrees) > 0, "A product needs at least one sphere")
    generators: list[tuple[str, int]] = []
    differential: dict[str, str] = {}
    for i, d in enumerate(degrees, start=1):
        factor = sphere(d, name=f"s{i}")
        generators.extend((g.name, g.degree) for g in factor.generators)
        for g, image in zip(factor.generators, factor.differential):
            if image:
                differential[g.name] = str(image)
    return SullivanAlgebra.build(
        generators, differential, name="x".join(f"S{d}" for d in degrees)
    )


def s2xs2() -> SullivanAlgebra:
    return sphere_product([2, 2])


def s2xs4() -> SullivanAlgebra:
    return sphere_product([2, 4])


def s3xs3() -> SullivanAlgebra:
    return sphere_product([3, 3])
