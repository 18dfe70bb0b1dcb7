from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from flagcohom.exactpoly import (
    GREVLEX,
    LEX,
    OMEGA,
    QQ,
    SQRT_M3,
    Polynomial,
    PolynomialSyntaxError,
    RationalLiteralError,
    RingSignature,
    SignatureMismatch,
    UnknownVariableError,
    format_polynomial,
    format_scalar,
    make_scalar,
    parse_polynomial,
    poly_add,
    poly_mul,
)
from flagcohom.exactpoly.scalar import (
    QuadraticScalar,
    conjugate,
    norm,
    scalar_inverse,
    scalar_sqrt,
)

SIG = RingSignature(("x1", "x2"))
SIG3 = RingSignature(("y", "x1", "x2"))

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12).map(QQ)
scalars = st.builds(make_scalar, rationals, rationals)
nonzero_scalars = scalars.filter(lambda s: s != 0)


def P(text, sig=SIG):
    return parse_polynomial(text, sig)


# scalars -------------------------------------------------------------------------

@given(scalars, scalars, scalars)
def test_field_distributivity(s, t, r):
    assert (s + t) * r == s * r + t * r


@given(nonzero_scalars)
def test_inverse(s):
    assert s * scalar_inverse(s) == 1
    assert s / s == 1


@given(rationals, rationals)
def test_norm_identity(a, b):
    z = make_scalar(a, b)
    assert z * conjugate(z) == a * a + 3 * b * b == norm(z)


def test_quadratic_normalizes_to_rational():
    z = make_scalar(QQ(3, 6), 0)
    assert not isinstance(z, QuadraticScalar)
    assert z == QQ(1, 2)
    assert (SQRT_M3 * SQRT_M3) == -3
    assert not isinstance(SQRT_M3 * SQRT_M3, QuadraticScalar)


def test_omega_is_cube_root_of_unity():
    assert OMEGA * OMEGA + OMEGA + 1 == 0
    assert OMEGA ** 3 == 1


def test_rationals_reduced():
    q = QQ(Fraction(6, -4))
    assert (q.numerator, q.denominator) == (-3, 2)


@given(scalars)
def test_sqrt_of_square(s):
    r = scalar_sqrt(s * s)
    assert r is not None and r * r == s * s


def test_sqrt_missing():
    assert scalar_sqrt(2) is None
    assert scalar_sqrt(QQ(7, 13)) is None
    assert scalar_sqrt(-3) == SQRT_M3


# polynomials ---------------------------------------------------------------------

def test_parse_examples():
    flag = P("x1^2 + x2^2 + x1*x2")
    assert flag.lm == (2, 0)
    assert len(flag.terms) == 3
    assert P("0").is_zero() and P("0").terms == {}
    f = P("(1/2)*x1 - (3/4)*x2^3")
    assert f.coefficient((1, 0)) == QQ(1, 2)
    assert f.coefficient((0, 3)) == QQ(-3, 4)
    assert P("(2/4)*x1") == P("(1/2)*x1")


def test_parse_errors():
    with pytest.raises(UnknownVariableError):
        P("x1 + z")
    with pytest.raises(RationalLiteralError):
        P("(1/0)*x1")
    with pytest.raises(PolynomialSyntaxError) as info:
        P("x1 + * x2")
    assert info.value.position >= 0
    with pytest.raises(PolynomialSyntaxError):
        P("x1^")


def test_add_examples():
    f = P("x1^2 + x1*x2")
    assert poly_add(f, SIG.zero()) == f
    assert poly_add(P("x1"), P("-x1")).is_zero()
    assert poly_add(f, P("x2^2")) == P("x1^2 + x1*x2 + x2^2")


def test_mul_examples():
    f = P("x1^2 - 3*x2")
    assert poly_mul(f, SIG.one()) == f
    assert P("y", SIG3) * P("y + x1", SIG3) == P("y^2 + x1*y", SIG3)
    xp = SIG.gen("x1") + SIG.gen("x2").scale(make_scalar(QQ(1, 2), QQ(1, 2)))
    xm = SIG.gen("x1") + SIG.gen("x2").scale(make_scalar(QQ(1, 2), QQ(-1, 2)))
    assert xp * xm == P("x1^2 + x1*x2 + x2^2")


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        poly_add(P("x1"), P("y", SIG3))


def test_grevlex_is_graded():
    sig = RingSignature(("a", "b", "c"), GREVLEX)
    f = parse_polynomial("a*c + b^2 + a^2*c + b^3", sig)
    degs = [sum(m) for m, _ in f.sorted_terms()]
    assert degs == sorted(degs, reverse=True)
    # grevlex tie break: b^2 > a*c
    assert parse_polynomial("a*c + b^2", sig).lm == (0, 2, 0)
    lex = sig.with_order(LEX)
    assert parse_polynomial("a*c + b^2", lex).lm == (1, 0, 1)


@st.composite
def polynomials(draw, sig=SIG3, quadratic=None):
    quad = draw(st.booleans()) if quadratic is None else quadratic
    n = draw(st.integers(0, 6))
    terms = {}
    for _ in range(n):
        m = tuple(draw(st.integers(0, 4)) for _ in range(sig.nvars))
        a = draw(rationals)
        b = draw(rationals) if quad else 0
        terms[m] = make_scalar(a, b)
    return Polynomial(sig, terms)


@given(polynomials(), polynomials(), polynomials())
def test_ring_laws(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f + g) - g == f
    assert f * g == g * f


@given(polynomials())
def test_print_parse_round_trip(f):
    text = format_polynomial(f)
    assert parse_polynomial(text, f.signature) == f
    assert str(f) == text


def test_printer_forms():
    assert format_scalar(QQ(3)) == "3"
    assert format_scalar(QQ(1, 2)) == "(1/2)"
    assert format_scalar(SQRT_M3) == "(sqrtm3)"
    assert format_scalar(make_scalar(1, 2)) == "(1 + 2*sqrtm3)"
    assert str(P("0")) == "0"
    assert parse_polynomial("(1 + 2*sqrtm3)*x1 - sqrtm3*x2", SIG).coefficient((0, 1)) == -SQRT_M3
