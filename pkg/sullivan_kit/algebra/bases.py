from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from humanize import intcomma

from sullivan_kit.algebra.generators import Generator, Monomial
from sullivan_kit.errors import ResourceLimitError

log = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def _enumerate(degrees: tuple[int, ...], odd: tuple[bool, ...], target: int) -> tuple[Monomial, ...]:
    found: list[Monomial] = []
    size = len(degrees)
    exponents = [0] * size

    def place(position: int, remaining: int) -> None:
        if position == size:
            if remaining == 0:
                found.append(tuple(exponents))
            return
        degree = degrees[position]
        highest = 1 if odd[position] else remaining // degree
        highest = min(highest, remaining // degree)
        for exponent in range(highest, -1, -1):
            exponents[position] = exponent
            place(position + 1, remaining - exponent * degree)
        exponents[position] = 0

    place(0, target)
    log.debug(f"Enumerated {len(found)} monomials of degree {target} on {size} generators")
    return tuple(found)


def basis_monomials(
    generators: Sequence[Generator], degree: int, limit: int | None = None
) -> list[Monomial]:
    """All monomials of the given degree, in descending lexicographic order.

    Raises ResourceLimitError when the basis has more than `limit` elements.
    """
    if degree < 0:
        return []
    monomials = _enumerate(
        tuple(g.degree for g in generators), tuple(g.is_odd for g in generators), degree
    )
    if limit is not None and len(monomials) > limit:
        raise ResourceLimitError(
            f"Degree {degree} has {intcomma(len(monomials))} monomials, "
            f"above the basis limit of {intcomma(limit)}"
        )
    return list(monomials)
