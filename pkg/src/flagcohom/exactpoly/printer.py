"""Text form of scalars and polynomials (the grammar read back by ``parser``)."""

from __future__ import annotations

from .scalar import QuadraticScalar, as_scalar

RADICAL_NAME = "sqrtm3"


def _rational_text(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(c) -> str:
    """Self-delimiting scalar text: ``3``, ``-3``, ``(1/2)``, ``(1 - 2*sqrtm3)``."""
    if isinstance(c, QuadraticScalar):
        b = c.b
        rad = RADICAL_NAME if abs(b) == 1 else f"{_rational_text(abs(b))}*{RADICAL_NAME}"
        if c.a == 0:
            return f"({'-' if b < 0 else ''}{rad})"
        return f"({_rational_text(c.a)} {'-' if b < 0 else '+'} {rad})"
    q = as_scalar(c)
    if q.denominator == 1:
        return str(q.numerator)
    return f"({_rational_text(q)})"


def format_monomial(m, variables) -> str:
    parts = []
    for v, e in zip(variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(p) -> str:
    terms = p.sorted_terms()
    if not terms:
        return "0"
    variables = p.signature.variables
    out = []
    for i, (m, c) in enumerate(terms):
        mono = format_monomial(m, variables)
        negative = not isinstance(c, QuadraticScalar) and c < 0
        mag = -c if negative else c
        if mono:
            coef = "" if mag == 1 else format_scalar(mag) + "*"
            body = coef + mono
        else:
            body = format_scalar(mag)
        if i == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)
