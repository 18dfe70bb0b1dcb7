"""Exact coefficient fields: the rationals and Q(sqrt(-3)).

Rationals are ``gmpy2.mpq`` values (ints and ``Fraction`` are accepted on input
and converted).  Elements with a non-zero radical part are
:class:`QuadraticScalar`; every operation that produces a quadratic element with
vanishing radical part hands back an ``mpq`` instead, so the two variants never
overlap.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

import gmpy2
from gmpy2 import mpq

QQ = mpq
MPQ = type(mpq(0))
RATIONAL_TYPES = (int, Fraction, MPQ)

__all__ = [
    "QQ",
    "QuadraticScalar",
    "RATIONAL_TYPES",
    "Scalar",
    "SQRT_M3",
    "as_scalar",
    "is_rational",
    "make_scalar",
    "scalar_sqrt",
    "scalar_inverse",
    "conjugate",
    "norm",
    "OMEGA",
]


class QuadraticScalar:
    """``a + b*sqrt(-3)`` with rational ``a`` and non-zero rational ``b``.

    Construct through :func:`make_scalar`, which normalizes ``b == 0`` to a
    rational.
    """

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a: mpq, b: mpq):
        self.a = a
        self.b = b
        self._hash = None

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QuadraticScalar):
            return make_scalar(self.a + other.a, self.b + other.b)
        if isinstance(other, RATIONAL_TYPES):
            return QuadraticScalar(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadraticScalar(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, QuadraticScalar):
            return make_scalar(self.a - other.a, self.b - other.b)
        if isinstance(other, RATIONAL_TYPES):
            return QuadraticScalar(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return QuadraticScalar(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QuadraticScalar):
            a, b, c, d = self.a, self.b, other.a, other.b
            return make_scalar(a * c - 3 * b * d, a * d + b * c)
        if isinstance(other, RATIONAL_TYPES):
            if other == 0:
                return QQ(0)
            return QuadraticScalar(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (QuadraticScalar, Rational)):
            return self * scalar_inverse(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return other * scalar_inverse(self)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return scalar_inverse(self) ** (-n)
        result: Scalar = QQ(1)
        base: Scalar = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QuadraticScalar):
            return self.a == other.a and self.b == other.b
        if isinstance(other, RATIONAL_TYPES):
            return False  # b != 0 by construction
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("sqrt-3", self.a, self.b))
        return self._hash

    def __bool__(self):
        return True

    def __repr__(self):
        return f"QuadraticScalar({self.a!s}, {self.b!s})"

    def __str__(self):
        from .printer import format_scalar
        return format_scalar(self)


Scalar = Union[mpq, QuadraticScalar]


def make_scalar(a, b=0) -> Scalar:
    """Build ``a + b*sqrt(-3)``, collapsing to a rational when ``b == 0``."""
    a = _qq(a)
    b = _qq(b)
    if b == 0:
        return a
    return QuadraticScalar(a, b)


def _qq(value) -> mpq:
    if isinstance(value, MPQ):
        return value
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, (int, Rational)):
        return QQ(value)
    if isinstance(value, str):
        f = Fraction(value)
        return QQ(f.numerator, f.denominator)
    raise TypeError(f"not an exact rational: {value!r}")


def as_scalar(value) -> Scalar:
    if isinstance(value, (MPQ, QuadraticScalar)):
        return value
    return _qq(value)


def is_rational(value) -> bool:
    return not isinstance(value, QuadraticScalar)


def conjugate(value: Scalar) -> Scalar:
    if isinstance(value, QuadraticScalar):
        return QuadraticScalar(value.a, -value.b)
    return value


def norm(value: Scalar) -> mpq:
    """Field norm down to Q: ``a^2 + 3 b^2``."""
    if isinstance(value, QuadraticScalar):
        return value.a * value.a + 3 * value.b * value.b
    return _qq(value) ** 2


def scalar_inverse(value: Scalar) -> Scalar:
    if isinstance(value, QuadraticScalar):
        n = norm(value)
        return QuadraticScalar(value.a / n, -value.b / n)
    if value == 0:
        raise ZeroDivisionError("inverse of zero scalar")
    return 1 / _qq(value)


SQRT_M3 = QuadraticScalar(QQ(0), QQ(1))
# primitive cube root of unity, omega^2 + omega + 1 = 0
OMEGA = QuadraticScalar(QQ(-1, 2), QQ(1, 2))


def _rational_sqrt(r: mpq) -> mpq | None:
    if r < 0:
        return None
    num, den = r.numerator, r.denominator
    if not (gmpy2.is_square(num) and gmpy2.is_square(den)):
        return None
    return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))


def scalar_sqrt(value) -> Scalar | None:
    """A square root inside Q(sqrt(-3)), or None when there is none."""
    value = as_scalar(value)
    if is_rational(value):
        r = _qq(value)
        s = _rational_sqrt(r)
        if s is not None:
            return s
        s = _rational_sqrt(-r / 3)
        return None if s is None else make_scalar(0, s)
    p, q = value.a, value.b
    n = _rational_sqrt(p * p + 3 * q * q)
    if n is None:
        return None
    a = _rational_sqrt((p + n) / 2)
    if a is None or a == 0:
        return None
    return make_scalar(a, q / (2 * a))
