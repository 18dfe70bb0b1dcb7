"""Exact scalars, sparse polynomials and Groebner bases."""

from .groebner import (
    GroebnerBasis,
    GroebnerTimeout,
    buchberger,
    divide,
    ideal_is_unit,
    ideal_member,
    is_groebner,
    is_reduced,
    normal_form,
    s_polynomial,
)
from .parser import PolynomialSyntaxError, RationalLiteralError, UnknownVariableError, parse_polynomial
from .poly import GREVLEX, LEX, Monomial, Polynomial, RingSignature, SignatureMismatch, poly_add, poly_mul
from .printer import format_polynomial, format_scalar
from .scalar import OMEGA, QQ, SQRT_M3, QuadraticScalar, Scalar, as_scalar, make_scalar

__all__ = [
    "GREVLEX", "LEX", "OMEGA", "QQ", "SQRT_M3",
    "GroebnerBasis", "GroebnerTimeout", "Monomial", "Polynomial", "PolynomialSyntaxError",
    "QuadraticScalar", "RationalLiteralError", "RingSignature", "Scalar", "SignatureMismatch",
    "UnknownVariableError", "as_scalar", "buchberger", "divide", "format_polynomial",
    "format_scalar", "ideal_is_unit", "ideal_member", "is_groebner", "is_reduced",
    "make_scalar", "normal_form", "parse_polynomial", "poly_add", "poly_mul", "s_polynomial",
]
