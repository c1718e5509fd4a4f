from sullivan_kit.algebra.bases import basis_monomials
from sullivan_kit.algebra.generators import FreeAlgebra, Generator, Monomial
from sullivan_kit.algebra.parsing import parse_polynomial
from sullivan_kit.algebra.polynomials import Polynomial, multiply, render

__all__ = [
    "FreeAlgebra",
    "Generator",
    "Monomial",
    "Polynomial",
    "basis_monomials",
    "multiply",
    "parse_polynomial",
    "render",
]
