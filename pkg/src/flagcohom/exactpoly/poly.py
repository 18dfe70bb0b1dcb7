"""Sparse multivariate polynomials over Q or Q(sqrt(-3)).

A monomial is a tuple of non-negative exponents, one per signature variable.
Polynomials keep their terms in a dict keyed by monomial; the canonical
(descending) term list is produced on demand under the signature's order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .scalar import QQ, RATIONAL_TYPES, QuadraticScalar, Scalar, as_scalar, is_rational, scalar_inverse

_SCALAR_TYPES = RATIONAL_TYPES + (QuadraticScalar,)

Monomial = Tuple[int, ...]

GREVLEX = "grevlex"
LEX = "lex"
ORDERS = (GREVLEX, LEX)


def grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    return m


_ORDER_KEYS: Dict[str, Callable[[Monomial], object]] = {GREVLEX: grevlex_key, LEX: lex_key}


class SignatureMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RingSignature:
    """Ordered variable names plus a monomial order tag."""

    variables: Tuple[str, ...]
    order: str = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if self.order not in _ORDER_KEYS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def key(self) -> Callable[[Monomial], object]:
        return _ORDER_KEYS[self.order]

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def gen(self, name: str) -> "Polynomial":
        i = self.index(name)
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {m: QQ(1)})

    def gens(self) -> List["Polynomial"]:
        return [self.gen(v) for v in self.variables]

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.unit_monomial(): QQ(1)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def const(self, c) -> "Polynomial":
        c = as_scalar(c)
        return Polynomial(self, {self.unit_monomial(): c} if c != 0 else {})

    def with_order(self, order: str) -> "RingSignature":
        return RingSignature(self.variables, order)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(m: Monomial, weights: Sequence[int] | None = None) -> int:
    if weights is None:
        return sum(m)
    return sum(e * w for e, w in zip(m, weights))


class Polynomial:
    """Immutable polynomial; ``terms`` maps monomial to a non-zero scalar."""

    __slots__ = ("signature", "terms", "_lm", "_hash")

    def __init__(self, signature: RingSignature, terms: Mapping[Monomial, Scalar] | None = None,
                 _clean: bool = True):
        self.signature = signature
        if terms is None:
            terms = {}
        if _clean:
            n = signature.nvars
            cleaned = {}
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError(f"monomial {m} has wrong length for {signature.variables}")
                if c != 0:
                    cleaned[tuple(m)] = as_scalar(c)
            terms = cleaned
        self.terms: Dict[Monomial, Scalar] = dict(terms)
        self._lm = None
        self._hash = None

    # construction helpers ------------------------------------------------

    @classmethod
    def _raw(cls, signature: RingSignature, terms: Dict[Monomial, Scalar]) -> "Polynomial":
        p = cls.__new__(cls)
        p.signature = signature
        p.terms = terms
        p._lm = None
        p._hash = None
        return p

    # basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar]]:
        """Terms strictly descending in the signature's monomial order."""
        key = self.signature.key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self.sorted_terms())

    @property
    def lm(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.signature.key)
        return self._lm

    @property
    def lc(self) -> Scalar:
        return self.terms[self.lm]

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(tuple(m), QQ(0))

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degrees(self, weights: Sequence[int] | None = None) -> set:
        return {monomial_degree(m, weights) for m in self.terms}

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return len(self.degrees(weights)) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self.terms.values())

    def field(self) -> str:
        return "Q" if self.is_rational() else "Qsqrtm3"

    def variables_used(self) -> set:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return {self.signature.variables[i] for i in used}

    # arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.signature != self.signature:
            raise SignatureMismatch(
                f"signature mismatch: {self.signature.variables}/{self.signature.order} vs "
                f"{other.signature.variables}/{other.signature.order}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, _SCALAR_TYPES):
            return self.signature.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s == 0:
                    del terms[m]
                else:
                    terms[m] = s
        return Polynomial._raw(self.signature, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.signature, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        c = as_scalar(c)
        if c == 0:
            return self.signature.zero()
        return Polynomial._raw(self.signature, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        if c == 0:
            return self.signature.zero()
        return Polynomial._raw(self.signature,
                               {monomial_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = terms.get(m)
                terms[m] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._raw(self.signature, {m: c for m, c in terms.items() if c != 0})

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(scalar_inverse(as_scalar(other)))
        return NotImplemented

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = self.signature.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(scalar_inverse(self.lc))

    # substitution --------------------------------------------------------

    def substitute(self, images: Mapping[str, "Polynomial"] | Sequence["Polynomial"],
                   target: RingSignature | None = None) -> "Polynomial":
        """Evaluate at polynomial images of the variables (a ring map).

        ``images`` is either a sequence aligned with the variables or a mapping
        from variable name to image; unmapped variables go to themselves (only
        allowed when the target signature is this one).
        """
        sig = self.signature
        if isinstance(images, Mapping):
            seq = []
            for v in sig.variables:
                if v in images:
                    seq.append(images[v])
                else:
                    if target is not None and target != sig:
                        raise ValueError(f"no image for variable {v}")
                    seq.append(sig.gen(v))
        else:
            seq = list(images)
            if len(seq) != sig.nvars:
                raise ValueError("image count does not match variable count")
        if target is None:
            target = seq[0].signature if seq else sig
        for img in seq:
            if img.signature != target:
                raise SignatureMismatch("substitution images live in different rings")
        # power cache per variable
        power_cache: List[Dict[int, Polynomial]] = [{0: target.one(), 1: img} for img in seq]

        def power(i: int, e: int) -> Polynomial:
            cache = power_cache[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * seq[i]
            return cache[e]

        result = target.zero()
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, values: Sequence) -> Scalar:
        """Evaluate at scalar values (aligned with the variables)."""
        total: Scalar = QQ(0)
        for m, c in self.terms.items():
            t = c
            for v, e in zip(values, m):
                if e:
                    t = t * (v ** e)
            total = total + t
        return total

    def change_signature(self, target: RingSignature, mapping: Mapping[str, str] | None = None
                         ) -> "Polynomial":
        """Re-embed into ``target`` by variable name (optionally renamed)."""
        mapping = dict(mapping or {})
        pos = []
        for i, v in enumerate(self.signature.variables):
            name = mapping.get(v, v)
            if name not in target.variables:
                if any(m[i] for m in self.terms):
                    raise ValueError(f"variable {v} has no counterpart in target")
                pos.append(None)
            else:
                pos.append(target.index(name))
        terms = {}
        n = target.nvars
        for m, c in self.terms.items():
            new = [0] * n
            for i, e in enumerate(m):
                if e:
                    new[pos[i]] += e
            terms[tuple(new)] = c
        return Polynomial._raw(target, terms)

    # comparison ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.signature == other.signature and self.terms == other.terms
        if isinstance(other, _SCALAR_TYPES):
            return self.terms == ({} if other == 0 else
                                  {self.signature.unit_monomial(): other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.signature, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        from .printer import format_polynomial
        return format_polynomial(self)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def linear_form(signature: RingSignature, coeffs: Iterable, names: Sequence[str] | None = None
                ) -> Polynomial:
    """``sum c_i * v_i`` over the named variables (default: all, in order)."""
    names = list(names) if names is not None else list(signature.variables)
    out = signature.zero()
    for c, v in zip(coeffs, names):
        out = out + signature.gen(v).scale(c)
    return out
