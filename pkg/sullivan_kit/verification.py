"""The verification battery: every worked computation, re-run and compared.

Each item is a registered callable returning whether it passed and a short
detail string. Items look models up through the catalog, so replacing a
catalog entry changes what they see.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable, Iterable, Sequence

from sullivan_kit.algebra.generators import FreeAlgebra, Generator
from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.bounds import (
    BoundQuery,
    Case,
    classify_case_from_model,
    closed_form_cap,
    generator_bound,
    optimize_chi,
    relaxed_optimum,
    sphere_optimum_expected,
)
from sullivan_kit.catalog import CATALOG, catalog_get
from sullivan_kit.catalog.hermitian import (
    PERIODIC_DEGREES,
    HermitianFamily,
    cross_check,
    hermitian_betti,
    periodicity_verdict,
)
from sullivan_kit.catalog.relative import minimal_model_weak_not_strong
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import InapplicableError, ModelValidationError, SullivanKitError
from sullivan_kit.fibrations import (
    SinglyGeneratedCase,
    check_versions,
    euler_multiplicativity,
    singly_generated_case,
    wilhelm_gap,
)
from sullivan_kit.halperin import AlgebraPresentation, Verdict, meier_check, presentation_of
from sullivan_kit.ideals import is_regular_sequence, reorder_xrem
from sullivan_kit.invariants import (
    LefschetzStatus,
    check_chi_ge_2l,
    find_lefschetz_class,
    four_periodic_chi,
    hard_lefschetz_check,
    profile,
    six_dimensional_b3,
    spherical_bound_check,
)
from sullivan_kit.reports import CheckResult, VerificationReport
from sullivan_kit.sullivan.classify import is_minimal, is_pure
from sullivan_kit.sullivan.cohomology import BettiVector, CochainComplex, cohomology
from sullivan_kit.sullivan.models import SullivanAlgebra
from sullivan_kit.sullivan.morphisms import verify_quasi_iso

log = logging.getLogger(__name__)

Outcome = tuple[bool, str]
CheckFn = Callable[[ToolkitConfig], Outcome]


@dataclass(frozen=True)
class Check:
    name: str
    citation: str
    run: CheckFn


CHECKS: dict[str, Check] = {}


def check(name: str, citation: str) -> Callable[[CheckFn], CheckFn]:
    def register(run: CheckFn) -> CheckFn:
        CHECKS[name] = Check(name, citation, run)
        return run

    return register


def _outcome(problems: Sequence[str], success: str) -> Outcome:
    if problems:
        return False, "; ".join(problems)
    return True, success


def _poincare_dual(betti: BettiVector, n: int) -> bool:
    return all(betti[i] == betti[n - i] for i in range(n + 1)) and all(
        betti[i] == 0 for i in range(n + 1, betti.cutoff + 1)
    )


def _model(key: str, **params: int) -> SullivanAlgebra:
    model = catalog_get(key, **params).model
    if not isinstance(model, SullivanAlgebra):
        raise InapplicableError(f"{key} is not a Sullivan model")
    return model


FLAG_RELATIONS = {
    "w6": "a^2 + a*b + b^2",
    "w12": "a^2 + a*b + b^2",
    "w24": "a^2 - a*b + b^2",
    "eschenburg": "a^2 + a*b - b^2",
}


@check("flag-manifolds", "flag manifold and Eschenburg space models, χ = 6")
def flag_manifolds(config: ToolkitConfig) -> Outcome:
    problems = []
    for key, relation in FLAG_RELATIONS.items():
        model = _model(key)
        dx = model.d_of("x")
        if dx != model.parse(relation):
            problems.append(f"{key}: dx = {dx}, expected {relation}")
        p = profile(model, config)
        if p.chi_formula != 6 or p.chi_homological != 6:
            problems.append(
                f"{key}: χ mismatch (degree ratio {p.chi_formula}, "
                f"homological {p.chi_homological}, expected 6)"
            )
        if not _poincare_dual(p.betti, p.formal_dim):
            problems.append(f"{key}: Betti vector {p.betti} is not Poincaré dual")
    return _outcome(problems, "χ = 6 by both computations for W6, W12, W24, Eschenburg")


def _model_entries() -> Iterable[tuple[str, SullivanAlgebra]]:
    for key in sorted(CATALOG):
        if CATALOG[key].kind == "model":
            yield key, _model(key)


@check("catalog-invariants", "global invariants of every catalog model")
def catalog_invariants(config: ToolkitConfig) -> Outcome:
    problems = []
    count = 0
    for key, model in _model_entries():
        count += 1
        if not is_minimal(model) or not is_pure(model):
            problems.append(f"{key}: not minimal and pure")
        p = profile(model, config)
        complex_ = CochainComplex(model, config)
        if not all(complex_.d_squared_vanishes(m) for m in range(p.formal_dim + 1)):
            problems.append(f"{key}: d² ≠ 0")
        if p.chi_formula is not None and p.chi_formula != p.chi_homological:
            problems.append(f"{key}: χ {p.chi_formula} ≠ {p.chi_homological}")
        if p.chi_homological > 0:
            if not check_chi_ge_2l(p):
                problems.append(f"{key}: χ = {p.chi_homological} < 2^{p.generator_count}")
            if any(p.betti[i] for i in range(1, p.formal_dim + 1, 2)):
                problems.append(f"{key}: odd Betti numbers with χ > 0")
        if not spherical_bound_check(model, config):
            problems.append(f"{key}: dim H < 2^{p.spherical_dim}")
        if not _poincare_dual(p.betti, p.formal_dim):
            problems.append(f"{key}: not Poincaré dual")
    return _outcome(problems, f"{count} models pass")


@check("quadrics", "SO(n+2)/SO(2)×SO(n) model x ↦ a² + uⁿ, y ↦ au")
def quadrics(config: ToolkitConfig) -> Outcome:
    problems = []
    for n in (4, 5, 6, 8):
        model = _model("so_q", n=n)
        p = profile(model, config)
        # odd n is rationally CP^n
        total = n + 2 if n % 2 == 0 else n + 1
        if p.formal_dim != 2 * n or p.total_dimension != total:
            problems.append(
                f"n = {n}: formal dimension {p.formal_dim}, dim H = {p.total_dimension}"
            )
        if not _poincare_dual(p.betti, p.formal_dim):
            problems.append(f"n = {n}: not Poincaré dual")
    return _outcome(problems, "dim H and duality for n = 4, 5, 6, 8")


@check("lefschetz-family", "Hard-Lefschetz models Λ⟨u, a, x, y⟩ of formal dimension n")
def lefschetz_family(config: ToolkitConfig) -> Outcome:
    problems = []
    instances = [(12, 6, 0, 0, 1), (12, 4, 1, 0, 1), (16, 8, 0, 1, 1), (20, 8, 2, 1, 3)]
    for n, deg_a, k1, k2, k3 in instances:
        model = _model("cor02", n=n, deg_a=deg_a, k1=k1, k2=k2, k3=k3)
        p = profile(model, config)
        if p.formal_dim != n:
            problems.append(f"n = {n}, deg a = {deg_a}: formal dimension {p.formal_dim}")
    return _outcome(problems, f"{len(instances)} instances have formal dimension n")


@check("hard-lefschetz", "cup product with powers of a degree-2 class")
def hard_lefschetz(config: ToolkitConfig) -> Outcome:
    problems = []
    cp3 = _model("cp", n=3)
    if not hard_lefschetz_check(cp3, cp3.generator("x"), config):
        problems.append("CP3 with ω = x fails")
    product = _model("s2xs2")
    if not hard_lefschetz_check(product, product.parse("s1 + s2"), config):
        problems.append("S2×S2 with ω = s1 + s2 fails")
    if hard_lefschetz_check(product, product.generator("s1"), config):
        problems.append("S2×S2 with ω = s1 passes")
    search = find_lefschetz_class(_model("w6"), config)
    if search.status is not LefschetzStatus.FOUND:
        problems.append(f"no Lefschetz class found on W6 ({search.status})")
    if find_lefschetz_class(_model("s2xs4"), config).status is not LefschetzStatus.NONE_EXISTS:
        problems.append("S2×S4 is reported as possibly Hard-Lefschetz")
    return _outcome(problems, "CP3, S2×S2, W6 Hard-Lefschetz; S2×S4 certified not")


@check("alternate-counterexample", "fibration with 74 < 78 and dim F = 74 > 72 = dim B")
def alternate_counterexample(config: ToolkitConfig) -> Outcome:
    relative = catalog_get("alternate_not_wilhelm").model
    versions = check_versions(relative, config)
    gap = wilhelm_gap(relative, config)
    alternate = versions.alternate
    problems = []
    if (alternate.fiber_odd_degree_sum, alternate.base_odd_degree_sum) != (74, 78):
        problems.append(
            f"odd degree sums {alternate.fiber_odd_degree_sum}, {alternate.base_odd_degree_sum}"
        )
    if alternate.regular_sequence is not True:
        problems.append("projections are not a regular sequence")
    if not alternate.holds:
        problems.append("alternate version does not hold")
    if versions.strong:
        problems.append("strong version unexpectedly holds")
    if (gap.fiber_dim, gap.base_dim, gap.gap) != (74, 72, -2):
        problems.append(f"dim F = {gap.fiber_dim}, dim B = {gap.base_dim}")
    return _outcome(problems, "74 < 78, regular, dim F = 74 > 72 = dim B, gap −2")


@check("weak-not-strong", "non-minimal fibration with transgression x1 ↦ 0, x2 ↦ c")
def weak_not_strong(config: ToolkitConfig) -> Outcome:
    relative = catalog_get("weak_not_strong").model
    versions = check_versions(relative, config)
    images = versions.transgression.map
    problems = []
    if not versions.weak:
        problems.append("total model is minimal")
    if versions.strong:
        problems.append("transgression is injective")
    if images["x1"] or str(images["x2"]) != "c":
        problems.append(f"d₀ = x1 ↦ {images['x1']}, x2 ↦ {images['x2']}")
    _, morphism = minimal_model_weak_not_strong()
    if not verify_quasi_iso(morphism, 10, config):
        problems.append("the map from Λ⟨y1, y2, x1, x'⟩ is not a quasi-isomorphism")
    return _outcome(problems, "weak holds, strong fails, quasi-isomorphism up to degree 10")


@check("wilhelm-gap", "dim B − dim F ≥ number of odd fiber generators, 2n for F₀ fibers")
def wilhelm_gap_sharpness(config: ToolkitConfig) -> Outcome:
    problems = []
    tangent = wilhelm_gap(catalog_get("unit_tangent_s4").model, config)
    if tangent.gap != 1 or tangent.gap != tangent.lemma02_bound:
        problems.append(f"T1S4: gap {tangent.gap}, bound {tangent.lemma02_bound}")
    twistor = wilhelm_gap(catalog_get("twistor", n=1).model, config)
    if twistor.gap != 2 or twistor.gap != twistor.f0_bound:
        problems.append(f"CP3 over HP1: gap {twistor.gap}, F₀ bound {twistor.f0_bound}")
    return _outcome(problems, "gap 1 for S3 → T1S4 → S4, gap 2 for S2 → CP3 → HP1")


@check("fibration-euler", "χ(E) = χ(B)·χ(F) and singly generated totals")
def fibration_euler(config: ToolkitConfig) -> Outcome:
    problems = []
    for key in ("unit_tangent_s4", "quaternionic_hopf", "twistor", "flag_w6", "trivial_product"):
        result = euler_multiplicativity(catalog_get(key).model, config)
        if not result.holds:
            problems.append(f"{key}: {result.total} ≠ {result.base}·{result.fiber}")
    expected = {
        "twistor": (SinglyGeneratedCase.EVEN_CONCENTRATED, 2),
        "quaternionic_hopf": (SinglyGeneratedCase.ODD_SPHERE, 7),
        "flag_w6": (SinglyGeneratedCase.NOT_SINGLY_GENERATED, None),
    }
    for key, (case, degree) in expected.items():
        report = singly_generated_case(catalog_get(key).model, config)
        if (report.case, report.generator_degree) != (case, degree):
            problems.append(f"{key}: {report.case} in degree {report.generator_degree}")
    return _outcome(problems, "Euler characteristics multiply; singly generated cases split")


@check("generator-bounds", "l ≤ k − 1, l ≤ (n+4)/(c+1) < k and l ≤ k by case")
def generator_bounds(config: ToolkitConfig) -> Outcome:
    problems = []
    for query, expected in (
        (BoundQuery(60, 3, Case.SPHERE), 2),
        (BoundQuery(60, 3, Case.CP), 2),
        (BoundQuery(40, 4, Case.S2xHP), 4),
    ):
        if generator_bound(query) != expected:
            problems.append(f"{query.case} n={query.n} k={query.k}: {generator_bound(query)}")
    for case in Case:
        for n in range(20, 201, 4):
            bounds = [generator_bound(BoundQuery(n, k, case)) for k in range(2, 9)]
            if bounds != sorted(bounds):
                problems.append(f"{case} n={n}: bound decreases in k")
    return _outcome(problems, "case bounds match and grow with k")


@check("euler-optimum", "the maximum of ∏ deg y/deg x is 2^(k−1) in the sphere case")
def euler_optimum(config: ToolkitConfig) -> Outcome:
    problems = []
    for n, k, expected in ((60, 3, 4), (40, 4, 8)):
        optimum = optimize_chi(BoundQuery(n, k, Case.SPHERE), config)
        if optimum.value != expected:
            problems.append(f"n={n} k={k}: {optimum.value} ≠ {expected}")
    if closed_form_cap(40, 4) != 44:
        problems.append(f"cap(40, 4) = {closed_form_cap(40, 4)}")
    product = optimize_chi(BoundQuery(40, 4, Case.S2xHP), config)
    if product.value > 44 or product.value != 32:
        problems.append(f"S2×HP n=40 k=4: {product.value}")
    return _outcome(problems, "4 for (60, 3), 8 for (40, 4), S2×HP 32 ≤ 44")


@check("euler-bound-grid", "χ ≤ 2^(k−2)(n/k + 1) for even n ≤ 200, k ≤ 6; sphere optimum 2^(k−1)")
def euler_bound_grid(config: ToolkitConfig) -> Outcome:
    problems = []
    searched = infeasible = 0
    for n in range(20, 201, 2):
        if closed_form_cap(n, 4) != n + 4:
            problems.append(f"cap(n={n}, 4) = {closed_form_cap(n, 4)}")
        for k in range(2, 7):
            for case in Case:
                query = BoundQuery(n, k, case)
                try:
                    optimum = optimize_chi(query, config)
                except InapplicableError:
                    infeasible += 1
                    continue
                searched += 1
                if optimum.value > closed_form_cap(n, k):
                    problems.append(f"{case} n={n} k={k}: {optimum.value}")
                if case is Case.SPHERE:
                    if optimum.value > relaxed_optimum(query):
                        problems.append(f"sphere n={n} k={k}: above the relaxation")
                    if optimum.value != sphere_optimum_expected(query):
                        problems.append(
                            f"sphere n={n} k={k}: {optimum.value} ≠ 2^{k - 1}"
                        )
    return _outcome(
        problems,
        f"{searched} optima below the cap, sphere optima 2^(k−1), {infeasible} infeasible",
    )


@check("case-classification", "low-degree Betti patterns of CP^∞, HP^∞ and spheres")
def case_classification(config: ToolkitConfig) -> Outcome:
    problems = []
    for model, c, expected in (
        (_model("cp", n=8), 10, Case.CP),
        (_model("hp", n=4), 10, Case.HP),
        (_model("sphere", d=24), 10, Case.SPHERE),
    ):
        found = classify_case_from_model(model, c, config)
        if found is not expected:
            problems.append(f"{model.label}: {found}, expected {expected}")
    return _outcome(problems, "CP8, HP4 and S24 classified")


F0_KEYS = ("w6", "w12", "w24", "eschenburg", "cp", "hp", "so_q", "cor02", "s2xs2", "s2xs4")


@check("halperin", "no negative-degree derivations; the three-generator shortcut")
def halperin(config: ToolkitConfig) -> Outcome:
    problems = []
    for key in F0_KEYS:
        report = meier_check(presentation_of(_model(key)))
        if report.verdict is Verdict.FAILS_CRITERION:
            problems.append(f"{key}: derivation of degree {report.shifts_checked[-1]}")
    crafted = AlgebraPresentation.build([("a", 2), ("b", 4)], ["a^2", "a*b", "b^2"])
    report = meier_check(crafted)
    witness = report.witness
    if report.verdict is not Verdict.FAILS_CRITERION or witness is None:
        problems.append(f"ℚ[a,b]/(a², ab, b²): {report.verdict}")
    else:
        a = crafted.algebra.generator("a")
        theta = witness.basis[0]
        if (witness.shift, witness.dimension) != (-2, 1) or theta["b"] != a or theta["a"]:
            problems.append(f"ℚ[a,b]/(a², ab, b²): witness in degree {witness.shift}")
    return _outcome(problems, f"{len(F0_KEYS)} F₀ models hold; ℚ[a,b]/(a², ab, b²) has b ↦ a")


def _random_automorphism(
    rng: random.Random, algebra: FreeAlgebra
) -> list[Polynomial]:
    """Images xᵢ ↦ cᵢxᵢ + (same-degree polynomial in the generators placed before xᵢ).

    The order is a random shuffle, so the map is triangular and invertible.
    """
    order = list(range(len(algebra)))
    rng.shuffle(order)
    images = [algebra.generator(i) for i in range(len(algebra))]
    for k, position in enumerate(order):
        earlier = set(order[:k])
        degree = algebra.generators[position].degree
        image = algebra.generator(position) * Fraction(rng.choice((1, 2, -1, 3)))
        for monomial in algebra.basis(degree):
            if monomial[position] == 0 and all(
                p in earlier for p, e in enumerate(monomial) if e
            ):
                coefficient = rng.randint(-2, 2)
                if coefficient:
                    image = image + Polynomial(algebra, {monomial: Fraction(coefficient)})
        images[position] = image
    return images


def random_regular_sequence(
    rng: random.Random,
) -> tuple[FreeAlgebra, tuple[Generator, ...], list[Polynomial], int]:
    """A random regular sequence on at most four even generators; returns ∏eᵢ too.

    Triangular relations xᵢ^eᵢ + c·(monomial in x₁..xᵢ₋₁) of degree ≤ 12 are
    pushed through a random graded automorphism, which keeps them regular
    but mixes their leading terms.
    """
    count = rng.randint(1, 4)
    degrees = sorted(rng.choice((2, 4, 6)) for _ in range(count))
    algebra = FreeAlgebra.of([(f"x{i + 1}", d) for i, d in enumerate(degrees)])
    relations = []
    exponents = []
    for i, degree in enumerate(degrees):
        exponent = rng.randint(2, min(3, 12 // degree))
        exponents.append(exponent)
        relation = algebra.generator(i) ** exponent
        earlier = [
            m for m in algebra.basis(exponent * degree) if not any(m[i:])
        ]
        if earlier:
            coefficient = rng.choice((-3, -2, -1, 1, 2, 3))
            relation = relation + Polynomial(algebra, {rng.choice(earlier): Fraction(coefficient)})
        relations.append(relation)
    images = _random_automorphism(rng, algebra)
    relations = [relation.substitute(images, algebra) for relation in relations]
    rng.shuffle(relations)
    return algebra, algebra.generators, relations, prod(exponents)


@check("xrem-reordering", "reordering a regular sequence so that 2·deg xⱼ ≤ deg y_(iⱼ)")
def xrem_reordering(config: ToolkitConfig) -> Outcome:
    rng = random.Random(config.random_seed)
    problems = []
    trials = 200
    for trial in range(trials):
        algebra, xs, ys, expected = random_regular_sequence(rng)
        try:
            pairing = reorder_xrem(xs, ys, algebra)
        except SullivanKitError as error:
            problems.append(f"trial {trial}: {error}")
            continue
        if not pairing.satisfies_degree_bound:
            problems.append(f"trial {trial}: pairs {pairing.degree_pairs}")
        report = is_regular_sequence(xs, ys, algebra)
        if report.quotient_dim != expected or report.expected_dim != expected:
            problems.append(f"trial {trial}: quotient dimension {report.quotient_dim} ≠ {expected}")
        if len(problems) > 5:
            break
    return _outcome(problems, f"{trials} random regular sequences reordered")


@check("hermitian-tables", "b₂ = … = b₁₀ = 1 filter on hermitian symmetric spaces")
def hermitian_tables(config: ToolkitConfig) -> Outcome:
    problems = []
    deviations = {
        HermitianFamily.M1: 4,
        HermitianFamily.M2: 6,
        HermitianFamily.M3: 6,
        HermitianFamily.M5: 8,
        HermitianFamily.M6: 10,
    }
    for family, degree in deviations.items():
        table = hermitian_betti(family, config)
        if table.passes_periodicity or table.first_deviation != degree or table.entries[degree] != 2:
            problems.append(f"{family}: deviation at {table.first_deviation}")
        if not cross_check(table):
            problems.append(f"{family}: disagrees with its Poincaré polynomial")
    quadric = hermitian_betti(HermitianFamily.M4, config)
    if not quadric.passes_periodicity or not cross_check(quadric):
        problems.append(f"M4: {quadric.entries}")
    for model in (_model("cp", n=5), _model("so_q", n=12)):
        betti = cohomology(model, cutoff=max(PERIODIC_DEGREES), config=config)
        passes, _ = periodicity_verdict({d: betti[d] for d in PERIODIC_DEGREES})
        if not passes:
            problems.append(f"{model.label} fails the pattern")
    return _outcome(problems, "M1, M2, M3, M5, M6 deviate as tabulated; CP5, so_q(12) pass")


@check("four-periodic-chi", "χ = 2 + (n − 2)/4·(2 − b₃) and b₃ ∈ {0, 2} in dimension 6")
def four_periodic(config: ToolkitConfig) -> Outcome:
    problems = []
    for n in range(10, 51, 4):
        for b3, expected in ((0, (n + 2) // 2), (2, 2)):
            result = four_periodic_chi(n, b3)
            if result.chi != expected or not result.positive:
                problems.append(f"n={n} b3={b3}: χ = {result.chi}")
    try:
        four_periodic_chi(10, 1)
        problems.append("odd b3 accepted")
    except ModelValidationError:
        pass
    if six_dimensional_b3() != [0, 2]:
        problems.append(f"six-dimensional b3 {six_dimensional_b3()}")
    return _outcome(problems, "n = 10..50 evaluated, odd b3 rejected, b3 ∈ {0, 2}")


def run_check(name: str, config: ToolkitConfig | None = None) -> CheckResult:
    config = config or ToolkitConfig.get_current()
    item = CHECKS[name]
    log.debug(f"Running check {name}")
    try:
        passed, detail = item.run(config)
    except SullivanKitError as error:
        passed, detail = False, f"{type(error).__name__}: {error}"
    return CheckResult(name=name, citation=item.citation, passed=passed, detail=detail)


def verify_paper(
    config: ToolkitConfig | None = None,
    only: Sequence[str] | None = None,
    on_result: Callable[[CheckResult], None] | None = None,
) -> VerificationReport:
    """Run the battery (or the named items) in registration order."""
    config = config or ToolkitConfig.get_current()
    names = list(CHECKS) if not only else list(only)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise InapplicableError(
            f"Unknown checks {', '.join(unknown)}; known: {', '.join(CHECKS)}"
        )
    results = []
    for name in names:
        result = run_check(name, config)
        results.append(result)
        if on_result is not None:
            on_result(result)
    return VerificationReport(results=results)
