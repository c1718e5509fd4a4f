"""Low-degree Betti numbers of the irreducible hermitian symmetric spaces.

The tabulated rows stop at the first degree where the space stops looking
like CP^∞. They are cross-checked against the Poincaré polynomial of the
equal-rank quotient G/H, ∏(1 − t^(h+1)) over the rational homotopy degrees
h of G divided by the same product for H.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum

from sympy import Poly, prod, symbols

from sullivan_kit.catalog.spaces import so_q
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import ContradictionError, InapplicableError
from sullivan_kit.sullivan.cohomology import cohomology

log = logging.getLogger(__name__)

PERIODIC_DEGREES = (2, 4, 6, 8, 10)
"""Four-periodicity in this range forces b₂ = b₄ = … = b₁₀ = 1."""

E6_HOMOTOPY_DEGREES = (3, 9, 11, 15, 17, 23)
E7_HOMOTOPY_DEGREES = (3, 11, 15, 19, 23, 27, 35)

_t = symbols("t")


class HermitianFamily(StrEnum):
    M1 = "M1"
    """SU(p+q)/S(U(p)×U(q))"""
    M2 = "M2"
    """SO(2n)/U(n)"""
    M3 = "M3"
    """Sp(n)/U(n)"""
    M4 = "M4"
    """SO(n+2)/SO(n)×SO(2)"""
    M5 = "M5"
    """E6/SO(10)×SO(2)"""
    M6 = "M6"
    """E7/E6×SO(2)"""


TABULATED: dict[HermitianFamily, dict[int, int]] = {
    HermitianFamily.M1: {2: 1, 4: 2},
    HermitianFamily.M2: {2: 1, 4: 1, 6: 2},
    HermitianFamily.M3: {2: 1, 4: 1, 6: 2},
    HermitianFamily.M5: {2: 1, 4: 1, 6: 1, 8: 2},
    HermitianFamily.M6: {2: 1, 4: 1, 6: 1, 8: 1, 10: 2},
}


@dataclass(frozen=True)
class BettiTable:
    family: HermitianFamily
    params: dict[str, int]
    entries: dict[int, int]
    """Betti numbers in even degrees 2, 4, … up to the first deviation."""
    passes_periodicity: bool
    first_deviation: int | None


def periodicity_verdict(entries: dict[int, int]) -> tuple[bool, int | None]:
    for degree in PERIODIC_DEGREES:
        if entries.get(degree, 0) != 1:
            return False, degree
    return True, None


def unitary_degrees(n: int) -> list[int]:
    return list(range(1, 2 * n, 2))


def special_unitary_degrees(n: int) -> list[int]:
    return list(range(3, 2 * n, 2))


def symplectic_degrees(n: int) -> list[int]:
    return list(range(3, 4 * n, 4))


def orthogonal_degrees(n: int) -> list[int]:
    """Rational homotopy degrees of SO(n)."""
    if n == 2:
        return [1]
    m = n // 2
    if n % 2:
        return list(range(3, 4 * m, 4))
    return [*range(3, 4 * m - 4, 4), 2 * m - 1]


def _group_degrees(family: HermitianFamily, params: dict[str, int]) -> tuple[list[int], list[int]]:
    match family:
        case HermitianFamily.M1:
            p, q = params["p"], params["q"]
            return (
                special_unitary_degrees(p + q),
                [*special_unitary_degrees(p), *special_unitary_degrees(q), 1],
            )
        case HermitianFamily.M2:
            n = params["n"]
            return orthogonal_degrees(2 * n), unitary_degrees(n)
        case HermitianFamily.M3:
            n = params["n"]
            return symplectic_degrees(n), unitary_degrees(n)
        case HermitianFamily.M4:
            n = params["n"]
            return orthogonal_degrees(n + 2), [*orthogonal_degrees(n), 1]
        case HermitianFamily.M5:
            return list(E6_HOMOTOPY_DEGREES), [*orthogonal_degrees(10), 1]
        case HermitianFamily.M6:
            return list(E7_HOMOTOPY_DEGREES), [*E6_HOMOTOPY_DEGREES, 1]


def poincare_betti(family: HermitianFamily, params: dict[str, int], upto: int = 10) -> dict[int, int]:
    """Betti numbers in degrees 0..upto from the Poincaré polynomial of G/H."""
    group, subgroup = _group_degrees(family, params)
    if len(group) != len(subgroup):
        raise ContradictionError(f"{family} is not an equal-rank quotient")
    numerator = Poly(prod(1 - _t ** (h + 1) for h in group), _t)
    denominator = Poly(prod(1 - _t ** (h + 1) for h in subgroup), _t)
    quotient, remainder = numerator.div(denominator)
    if not remainder.is_zero:
        raise ContradictionError(f"Poincaré series of {family} is not a polynomial")
    coefficients = dict(quotient.terms())
    return {degree: int(coefficients.get((degree,), 0)) for degree in range(upto + 1)}


def _check_params(family: HermitianFamily, params: dict[str, int]) -> dict[str, int]:
    match family:
        case HermitianFamily.M1:
            p, q = params.get("p", 2), params.get("q", 2)
            if p < 2 or q < 2:
                raise InapplicableError("M1 needs p, q ≥ 2; otherwise it is a projective space")
            return {"p": p, "q": q}
        case HermitianFamily.M2:
            n = params.get("n", 4)
            if n <= 3:
                raise InapplicableError("M2 needs n > 3")
            return {"n": n}
        case HermitianFamily.M3:
            n = params.get("n", 3)
            if n < 3:
                raise InapplicableError("M3 needs n ≥ 3")
            return {"n": n}
        case HermitianFamily.M4:
            n = params.get("n", 12)
            if n < 5:
                raise InapplicableError("M4 needs n ≥ 5 to reach degree 10")
            return {"n": n}
        case _:
            if params:
                raise InapplicableError(f"{family} takes no parameters")
            return {}


def hermitian_betti(
    family: HermitianFamily | str, config: ToolkitConfig | None = None, **params: int
) -> BettiTable:
    family = HermitianFamily(family)
    params = _check_params(family, params)
    if family is HermitianFamily.M4:
        betti = cohomology(so_q(params["n"]), cutoff=max(PERIODIC_DEGREES), config=config)
        full = {d: betti[d] for d in PERIODIC_DEGREES}
        passes, deviation = periodicity_verdict(full)
        entries = {
            d: b for d, b in full.items() if deviation is None or d <= deviation
        }
        return BettiTable(family, params, entries, passes, deviation)
    entries = dict(TABULATED[family])
    passes, deviation = periodicity_verdict(entries)
    log.debug(f"{family} {params}: first deviation in degree {deviation}")
    return BettiTable(family, params, entries, passes, deviation)


def cross_check(table: BettiTable) -> bool:
    """Whether the table agrees with the Poincaré polynomial in every listed degree."""
    computed = poincare_betti(table.family, table.params, max(table.entries))
    return all(computed[degree] == b for degree, b in table.entries.items())
