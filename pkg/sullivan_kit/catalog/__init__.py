"""Built-in models, addressed by key with integer parameters."""

from __future__ import annotations

import inspect
from dataclasses import dataclass, field
from typing import Any, Callable

from sullivan_kit.catalog import hermitian, relative, spaces
from sullivan_kit.errors import InapplicableError, UnknownCatalogEntry
from sullivan_kit.fibrations import RelativeSullivan
from sullivan_kit.sullivan.models import SullivanAlgebra


@dataclass(frozen=True)
class CatalogItem:
    key: str
    builder: Callable[..., Any]
    provenance: str
    kind: str = "model"
    """"model", "relative" or "table"."""
    defaults: dict[str, Any] = field(default_factory=dict)

    @property
    def parameters(self) -> list[str]:
        return [
            name
            for name, parameter in inspect.signature(self.builder).parameters.items()
            if parameter.kind is not inspect.Parameter.VAR_KEYWORD and name != "config"
        ]


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    params: dict[str, Any]
    model: SullivanAlgebra | RelativeSullivan | hermitian.BettiTable
    provenance: str


CATALOG: dict[str, CatalogItem] = {
    item.key: item
    for item in [
        CatalogItem("sphere", spaces.sphere, "the d-sphere", defaults={"d": 2}),
        CatalogItem("cp", spaces.cp, "complex projective space CP^n", defaults={"n": 2}),
        CatalogItem("hp", spaces.hp, "quaternionic projective space HP^n", defaults={"n": 1}),
        CatalogItem("w6", spaces.w6, "flag manifold W⁶ = SU(3)/T²"),
        CatalogItem("w12", spaces.w12, "flag manifold W¹² = Sp(3)/Sp(1)³"),
        CatalogItem("w24", spaces.w24, "flag manifold W²⁴ = F₄/Spin(8), x ↦ a² − ab + b²"),
        CatalogItem("eschenburg", spaces.eschenburg, "Eschenburg space, x ↦ a² + ab − b²"),
        CatalogItem(
            "so_q",
            spaces.so_q,
            "SO(n+2)/SO(2)×SO(n), x ↦ a² + uⁿ, y ↦ au",
            defaults={"n": 4},
        ),
        CatalogItem(
            "cor02",
            spaces.cor02_family,
            "Hard-Lefschetz models Λ⟨u, a, x, y⟩ of formal dimension n",
            defaults={"n": 12, "deg_a": 6, "k3": 1},
        ),
        CatalogItem("s2xs2", spaces.s2xs2, "S² × S²"),
        CatalogItem("s2xs4", spaces.s2xs4, "S² × S⁴"),
        CatalogItem("s3xs3", spaces.s3xs3, "S³ × S³"),
        CatalogItem(
            "sphere_product",
            spaces.sphere_product,
            "a product of spheres",
            defaults={"degrees": [2, 2]},
        ),
        CatalogItem(
            "alternate_not_wilhelm",
            relative.alternate_not_wilhelm,
            "fibration satisfying the alternate version with dim F > dim B",
            kind="relative",
        ),
        CatalogItem(
            "weak_not_strong",
            relative.weak_not_strong,
            "non-minimal fibration whose transgression is not injective",
            kind="relative",
        ),
        CatalogItem("unit_tangent_s4", relative.unit_tangent_s4, "S³ → T₁S⁴ → S⁴", kind="relative"),
        CatalogItem(
            "quaternionic_hopf",
            relative.quaternionic_hopf,
            "S³ → S^(4n+3) → HPⁿ",
            kind="relative",
            defaults={"n": 1},
        ),
        CatalogItem(
            "twistor",
            relative.twistor,
            "S² → CP^(2n+1) → HPⁿ",
            kind="relative",
            defaults={"n": 1},
        ),
        CatalogItem("flag_w6", relative.flag_w6, "S² → W⁶ → CP²", kind="relative"),
        CatalogItem("trivial_product", relative.trivial_product, "S² → S⁴ × S² → S⁴", kind="relative"),
        CatalogItem(
            "cp_over_sphere",
            relative.cp_over_sphere,
            "CP-fibration over an even sphere, y ↦ u^top + k·a·u^low",
            kind="relative",
            defaults={"n": 12, "deg_a": 4, "k": 1},
        ),
        CatalogItem(
            "hermitian",
            hermitian.hermitian_betti,
            "low-degree Betti numbers of irreducible hermitian symmetric spaces",
            kind="table",
            defaults={"family": "M1"},
        ),
    ]
}


def catalog_keys() -> list[str]:
    return sorted(CATALOG)


def catalog_get(key: str, **params: Any) -> CatalogEntry:
    try:
        item = CATALOG[key]
    except KeyError:
        raise UnknownCatalogEntry(
            f"Unknown catalog entry {key!r}; known entries: {', '.join(catalog_keys())}"
        )
    merged = {**item.defaults, **params}
    unknown = set(merged) - set(item.parameters) - (
        {"p", "q", "n"} if item.kind == "table" else set()
    )
    if unknown:
        raise InapplicableError(
            f"{key} does not take parameters {', '.join(sorted(unknown))}"
        )
    model = item.builder(**merged)
    return CatalogEntry(key, merged, model, item.provenance)


__all__ = [
    "CATALOG",
    "CatalogEntry",
    "CatalogItem",
    "catalog_get",
    "catalog_keys",
]
