"""Generator-count bounds and the exact Euler characteristic optimization.

A pure model contributes pairs (deg x, deg y) of even integers, x a
polynomial generator and y the degree of the differential of the matching
odd generator. The Euler characteristic is the product of y/x over the
pairs, and Σ(y − x) is the formal dimension n.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import (
    InapplicableError,
    ModelValidationError,
    ResourceLimitError,
    UnsupportedShapeError,
)
from sullivan_kit.invariants import friedlander_halperin, long_word_degrees
from sullivan_kit.sullivan.cohomology import BettiVector, CochainComplex, cohomology
from sullivan_kit.sullivan.models import SullivanAlgebra

log = logging.getLogger(__name__)

Pair = tuple[int, int]
Witness = tuple[Pair, ...]


class Case(StrEnum):
    SPHERE = "sphere"
    CP = "cp"
    HP = "hp"
    S2xHP = "s2xhp"


class Threshold(StrEnum):
    N_OVER_K = "n/k"
    """deg x > n/k, as in the optimization."""
    C = "c"
    """deg x > c = ⌊(n+4)/k⌋, as in the case analysis."""


class SearchMode(StrEnum):
    REALIZABLE = "realizable"
    DISPLAYED = "displayed"
    PRODUCT = "product"


DEFAULT_MODES = {
    Case.SPHERE: SearchMode.REALIZABLE,
    Case.CP: SearchMode.REALIZABLE,
    Case.HP: SearchMode.REALIZABLE,
    Case.S2xHP: SearchMode.PRODUCT,
}


@dataclass(frozen=True)
class BoundQuery:
    n: int
    k: int
    case: Case = Case.SPHERE
    threshold: Threshold = Threshold.N_OVER_K
    mode: SearchMode | None = None
    c: int = field(init=False)

    def __post_init__(self) -> None:
        if self.n <= 0 or self.n % 2:
            raise ModelValidationError(
                f"n = {self.n} must be a positive even integer", invariant="n-even"
            )
        if self.k < 2:
            raise ModelValidationError(f"k = {self.k} must be at least 2", invariant="k")
        object.__setattr__(self, "c", (self.n + 4) // self.k)

    @property
    def search_mode(self) -> SearchMode:
        return self.mode or DEFAULT_MODES[self.case]

    def exceeds(self, x: int) -> bool:
        """Whether x clears the lower threshold for unconstrained generators."""
        if self.threshold is Threshold.N_OVER_K:
            return x * self.k > self.n
        return x > self.c

    @property
    def smallest_degree(self) -> int:
        x = 2
        while not self.exceeds(x):
            x += 2
        return x


@dataclass(frozen=True)
class Optimum:
    value: Fraction
    witness: Witness
    l: int

    def __post_init__(self) -> None:
        if self.witness and self.value != Fraction(
            prod(y for _, y in self.witness), prod(x for x, _ in self.witness)
        ):
            raise ValueError("Optimum value does not match its witness")


def _even_above(value: int) -> int:
    """Smallest even integer strictly greater than value."""
    return value + 2 - value % 2 if value >= 0 else 0


def classify_case(
    low_betti: BettiVector | Sequence[int], c: int, cup_square_zero: bool | None = None
) -> Case:
    """Match the Betti numbers in degrees 1..c against the four periodic patterns.

    Sphere-like and CP-like spaces share Betti numbers with S² × HP^∞ in the
    second case, so `cup_square_zero` (the square of the degree-2 class
    vanishes) selects S2xHP. Alternatively the entries b₂ = b₃ = b₄ = 1 with
    nothing else below c are read as the ranks of that case's generators.
    """
    dims = tuple(low_betti.dims if isinstance(low_betti, BettiVector) else low_betti)
    if len(dims) < c + 1:
        raise InapplicableError(
            f"Betti numbers are known up to degree {len(dims) - 1}, the case split needs {c}"
        )
    window = dims[1 : c + 1]

    def at(degree: int) -> int:
        return window[degree - 1] if 1 <= degree <= len(window) else 0

    if not any(window):
        return Case.SPHERE
    if (at(1), at(2), at(3), at(4)) == (0, 1, 1, 1) and not any(window[4:]):
        return Case.S2xHP
    if all(b == (1 if i % 2 == 0 else 0) for i, b in enumerate(window, start=1)):
        return Case.S2xHP if cup_square_zero else Case.CP
    if all(b == (1 if i % 4 == 0 else 0) for i, b in enumerate(window, start=1)):
        return Case.HP
    raise UnsupportedShapeError(
        f"Betti numbers {' '.join(map(str, dims[: c + 1]))} are not 4-periodic"
    )


def classify_case_from_model(
    model: SullivanAlgebra, c: int, config: ToolkitConfig | None = None
) -> Case:
    complex_ = CochainComplex(model, config)
    betti = cohomology(model, cutoff=max(c, 4), config=config, complex_=complex_)
    cup_square_zero = None
    if betti[2] == 1:
        (z,) = complex_.cohomology_basis(2)
        cup_square_zero = complex_.is_exact(z * z, 4)
    return classify_case(betti, c, cup_square_zero)


def generator_bound(query: BoundQuery) -> int:
    c = query.c
    match query.case:
        case Case.SPHERE:
            return query.n // (c + 1)
        case Case.CP | Case.HP:
            return (query.n + 4) // (c + 1)
        case Case.S2xHP:
            return 1 + (query.n + 2) // (c + 1)


def closed_form_cap(n: int, k: int) -> Fraction:
    """2^(k−2)·(n/k + 1)."""
    return Fraction(2 ** (k - 2) * (n + k), k)


def relaxed_optimum(query: BoundQuery) -> Fraction:
    """2^l for the largest number of sphere pairs that fit; the cap for the other cases."""
    if query.case is Case.SPHERE:
        return Fraction(2 ** (query.n // query.smallest_degree))
    return closed_form_cap(query.n, query.k)


@dataclass(frozen=True)
class _Shape:
    """Pairs forced by the case: exact pairs and low generators with their y thresholds."""

    exact: tuple[Pair, ...]
    low: tuple[Pair, ...]


def _shape(query: BoundQuery) -> _Shape:
    c = query.c
    match query.case:
        case Case.SPHERE:
            return _Shape((), ())
        case Case.CP:
            return _Shape((), ((2, max(4, _even_above(c))),))
        case Case.HP:
            return _Shape((), ((4, max(8, _even_above(c))),))
        case Case.S2xHP:
            return _Shape(((2, 4),), ((4, max(8, _even_above(c))),))


def _large_multisets(smallest: int, budget: int, start: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of even integers ≥ smallest with sum ≤ budget."""
    yield ()
    x = start or smallest
    while x <= budget:
        for rest in _large_multisets(smallest, budget - x, x):
            yield (x, *rest)
        x += 2


def _better(candidate: tuple[Fraction, Witness], best: tuple[Fraction, Witness] | None) -> bool:
    if best is None:
        return True
    return candidate[0] > best[0] or (candidate[0] == best[0] and candidate[1] < best[1])


def _pairs(free: Sequence[Pair], ys: Sequence[int], exact: Sequence[Pair]) -> Witness:
    """Match y degrees (non-increasing) against thresholds sorted the same way."""
    ordered = sorted(free, key=lambda pair: (-pair[1], pair[0]))
    return tuple(sorted([*exact, *((x, y) for (x, _), y in zip(ordered, ys))]))


def _search_realizable(query: BoundQuery, large: tuple[int, ...]) -> tuple[Fraction, Witness] | None:
    shape = _shape(query)
    free = [*shape.low, *((x, 2 * x) for x in large)]
    xs = [x for x, _ in shape.exact] + [x for x, _ in free]
    total = query.n + sum(xs) - sum(y for _, y in shape.exact)
    thresholds = sorted((t for _, t in free), reverse=True)
    if not free or sum(thresholds) > total:
        return None
    words = long_word_degrees(xs, total)
    candidates = [y for y in range(total, thresholds[-1] - 1, -1) if (words >> y) & 1 and y % 2 == 0]
    denominator = prod(xs)
    exact_product = prod(y for _, y in shape.exact)
    best: tuple[Fraction, Witness] | None = None
    tails = [sum(thresholds[i:]) for i in range(len(thresholds) + 1)]

    def fill(i: int, ceiling: int, remaining: int, chosen: list[int]) -> None:
        nonlocal best
        slots = len(thresholds) - i
        if slots == 0:
            if remaining:
                return
            ys = [y for _, y in shape.exact] + chosen
            if not friedlander_halperin(xs, ys):
                return
            value = Fraction(exact_product * prod(chosen), denominator)
            candidate = (value, _pairs(free, chosen, shape.exact))
            if _better(candidate, best):
                best = candidate
            return
        if best is not None:
            bound = Fraction(
                exact_product * prod(chosen) * remaining**slots, denominator * slots**slots
            )
            if bound < best[0]:
                return
        low = max(thresholds[i], -(-remaining // slots))
        high = min(ceiling, remaining - tails[i + 1])
        for y in candidates:
            if y > high:
                continue
            if y < low:
                break
            chosen.append(y)
            fill(i + 1, y, remaining - y, chosen)
            chosen.pop()

    fill(0, total, total, [])
    return best


def _search_displayed(query: BoundQuery, large: tuple[int, ...]) -> tuple[Fraction, Witness] | None:
    shape = _shape(query)
    free = [*shape.low, *((x, 2 * x) for x in large)]
    if not free:
        return None
    xs = [x for x, _ in shape.exact] + [x for x, _ in free]
    total = query.n + sum(xs) - sum(y for _, y in shape.exact)
    ys = [t for _, t in free]
    spare = total - sum(ys)
    if spare < 0:
        return None
    # raising the smallest y first maximizes the product
    for _ in range(spare // 2):
        smallest = min(range(len(ys)), key=lambda i: (ys[i], i))
        ys[smallest] += 2
    witness = tuple(sorted([*shape.exact, *((x, y) for (x, _), y in zip(free, ys))]))
    value = Fraction(prod(y for _, y in witness), prod(x for x, _ in witness))
    return value, witness


def _search_partition(
    query: BoundQuery, partition: Sequence[tuple[int, ...]]
) -> tuple[Fraction, Witness] | None:
    search = (
        _search_realizable if query.search_mode is SearchMode.REALIZABLE else _search_displayed
    )
    best: tuple[Fraction, Witness] | None = None
    for large in partition:
        found = search(query, large)
        if found is not None and _better(found, best):
            best = found
    return best


def _sphere_degrees(query: BoundQuery, count: int, total: int) -> tuple[int, ...] | None:
    """The lexicographically smallest `count` admissible even degrees summing to total."""
    e = query.smallest_degree
    if count == 0:
        return () if total == 0 else None
    if total % 2 or total < count * e:
        return None
    return (e,) * (count - 1) + (total - (count - 1) * e,)


def _search_product(query: BoundQuery) -> tuple[Fraction, Witness] | None:
    """Products of the case's model space (m-fold truncation) with spheres."""
    best: tuple[Fraction, Witness] | None = None
    n, k, c = query.n, query.k, query.c
    factors: list[tuple[Pair, ...]] = []
    match query.case:
        case Case.SPHERE:
            factors.append(())
        case Case.CP:
            factors.extend(((2, y),) for y in range(max(4, _even_above(c)), n + 3, 2))
        case Case.HP:
            factors.extend(
                ((4, y),) for y in range(max(8, _even_above(c)), n + 5, 4)
            )
        case Case.S2xHP:
            for y in range(max(8, _even_above(c)), n + 5, 4):
                m_plus_one = y // 4
                if 2 * k * m_plus_one <= n - k:
                    factors.append(((2, 4), (4, y)))
    for factor in factors:
        rest = n - sum(y - x for x, y in factor)
        if rest < 0:
            continue
        for count in range(rest // query.smallest_degree + 1):
            degrees = _sphere_degrees(query, count, rest)
            if degrees is None:
                continue
            witness = tuple(sorted([*factor, *((x, 2 * x) for x in degrees)]))
            if not witness:
                continue
            value = Fraction(prod(y for _, y in witness), prod(x for x, _ in witness))
            if _better((value, witness), best):
                best = (value, witness)
    return best


def optimize_chi(query: BoundQuery, config: ToolkitConfig | None = None) -> Optimum:
    """The exact maximum of ∏ y/x over the pairs admissible for the query's case."""
    config = config or ToolkitConfig.get_current()
    if query.n > config.search_max_n or query.k > config.search_max_k:
        raise ResourceLimitError(
            f"n = {query.n}, k = {query.k} is outside the search domain "
            f"(n ≤ {config.search_max_n}, k ≤ {config.search_max_k})"
        )
    mode = query.search_mode
    log.debug(f"Optimizing χ for n={query.n}, k={query.k}, {query.case} ({mode})")
    if mode is SearchMode.PRODUCT:
        best = _search_product(query)
    else:
        shape = _shape(query)
        budget = (
            query.n
            - sum(y - x for x, y in shape.exact)
            - sum(t - x for x, t in shape.low)
        )
        multisets = list(_large_multisets(query.smallest_degree, max(budget, -1)))
        log.debug(f"{len(multisets)} generator degree tuples to search")
        workers = config.search_workers
        if workers > 1 and len(multisets) > workers:
            chunks = [multisets[i::workers] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_search_partition, [query] * workers, chunks))
        else:
            results = [_search_partition(query, multisets)]
        best = None
        for result in results:
            if result is not None and _better(result, best):
                best = result
    if best is None:
        raise InapplicableError(
            f"No admissible degrees for n = {query.n}, k = {query.k}, case {query.case}"
        )
    value, witness = best
    return Optimum(value, witness, len(witness))


def sphere_optimum_expected(query: BoundQuery) -> Fraction | None:
    """2^(k−1) when k − 1 sphere pairs fit, else None."""
    if query.case is not Case.SPHERE:
        return None
    if (query.k - 1) * query.smallest_degree > query.n:
        return None
    return Fraction(2 ** (query.k - 1))

