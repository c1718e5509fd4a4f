"""Exact linear algebra over the rationals on sparse rows.

A matrix is a list of rows, each row a dict column -> Fraction, plus a
column count. The heavy lifting is done by sympy's DomainMatrix over QQ.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

SparseRow = dict[int, Fraction]


def to_qq(value: Fraction | int) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(element: Any) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def domain_matrix(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> DomainMatrix:
    data: dict[int, dict[int, Any]] = {}
    for i, row in enumerate(rows):
        entries = {j: to_qq(v) for j, v in row.items() if v}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _nonzero(rows: Sequence[Mapping[int, Fraction]]) -> list[Mapping[int, Fraction]]:
    return [row for row in rows if any(row.values())]


def rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    rows = _nonzero(rows)
    if not rows or ncols == 0:
        return 0
    return int(domain_matrix(rows, ncols).rank())


def nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> list[SparseRow]:
    """A basis of {v : row · v = 0 for every row}."""
    if ncols == 0:
        return []
    rows = _nonzero(rows)
    if not rows:
        return [{j: Fraction(1)} for j in range(ncols)]
    kernel = domain_matrix(rows, ncols).nullspace()
    basis = []
    for vector in kernel.to_list():
        entries = {j: to_fraction(v) for j, v in enumerate(vector) if v}
        # scaled so that the last nonzero entry is 1
        last = entries[max(entries)]
        basis.append({j: v / last for j, v in entries.items()})
    return basis


def transpose(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> list[SparseRow]:
    columns: list[SparseRow] = [{} for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, value in row.items():
            if value:
                columns[j][i] = value
    return columns


def left_nullspace(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> list[SparseRow]:
    """A basis of {w : Σ w_i row_i = 0}, vectors indexed by row."""
    return nullspace(transpose(rows, ncols), len(rows))


def rank_increase(
    base: Sequence[Mapping[int, Fraction]],
    extra: Sequence[Mapping[int, Fraction]],
    ncols: int,
) -> int:
    """How much `extra` adds to the span of `base`."""
    return rank([*base, *extra], ncols) - rank(base, ncols)
