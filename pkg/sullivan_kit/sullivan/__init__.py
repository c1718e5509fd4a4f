from sullivan_kit.sullivan.classify import Classification, classify, pure_associate
from sullivan_kit.sullivan.cohomology import (
    BettiVector,
    CochainComplex,
    CutoffPolicy,
    cohomology,
    formal_dimension,
    homotopy_euler_characteristic,
)
from sullivan_kit.sullivan.models import SullivanAlgebra, ValidationReport, validate
from sullivan_kit.sullivan.morphisms import DgaMorphism, verify_quasi_iso

__all__ = [
    "BettiVector",
    "Classification",
    "CochainComplex",
    "CutoffPolicy",
    "DgaMorphism",
    "SullivanAlgebra",
    "ValidationReport",
    "classify",
    "cohomology",
    "formal_dimension",
    "homotopy_euler_characteristic",
    "pure_associate",
    "validate",
    "verify_quasi_iso",
]
