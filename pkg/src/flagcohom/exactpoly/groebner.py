"""Multivariate division and Buchberger's algorithm.

Pairs are processed by the normal strategy (smallest lcm first, ties broken by
the monomial order and then by generator index) and pruned with the
Gebauer-Moeller update, which covers both the coprime-leading-term criterion
and the chain criterion.  Everything is exact and deterministic.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .poly import (
    LEX,
    GREVLEX,
    Monomial,
    Polynomial,
    RingSignature,
    SignatureMismatch,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)
from .scalar import QQ, Scalar, scalar_inverse

Terms = Dict[Monomial, Scalar]


class GroebnerTimeout(RuntimeError):
    """Raised when a Buchberger run exceeds its time budget."""


def _heap_key(order: str) -> Callable[[Monomial], tuple]:
    # smallest heap key = largest monomial
    if order == GREVLEX:
        return lambda m: (-sum(m), m[::-1])
    if order == LEX:
        return lambda m: tuple(-e for e in m)
    raise ValueError(order)


@dataclass
class _Divisor:
    lm: Monomial
    terms: Terms  # monic


def _reduce_terms(terms: Terms, divisors: Sequence[_Divisor], heap_key,
                  full: bool = True, quotients: Optional[List[Terms]] = None) -> Terms:
    """Remainder of ``terms`` on division by monic ``divisors``.

    With ``full=False`` only the leading term is reduced (top reduction).
    If ``quotients`` is given, quotient terms are accumulated into it.
    """
    p = dict(terms)
    heap = [(heap_key(m), m) for m in p]
    heapq.heapify(heap)
    rem: Terms = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.get(m)
        if c is None:
            continue
        for k, d in enumerate(divisors):
            if monomial_divides(d.lm, m):
                break
        else:
            d = None
        del p[m]
        if d is None:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
            continue
        q = monomial_div(m, d.lm)
        if quotients is not None:
            qk = quotients[k]
            old = qk.get(q)
            s = c if old is None else old + c
            if s == 0:
                qk.pop(q, None)
            else:
                qk[q] = s
        dlm = d.lm
        for gm, gc in d.terms.items():
            if gm == dlm:
                continue
            nm = tuple(a + b for a, b in zip(gm, q))
            old = p.get(nm)
            if old is None:
                p[nm] = -c * gc
                heapq.heappush(heap, (heap_key(nm), nm))
            else:
                s = old - c * gc
                if s == 0:
                    del p[nm]
                else:
                    p[nm] = s
    return rem


def _monic_terms(terms: Terms, lm: Monomial) -> Terms:
    inv = scalar_inverse(terms[lm])
    if inv == 1:
        return terms
    return {m: c * inv for m, c in terms.items()}


def divide(f: Polynomial, divisors: Sequence[Polynomial]) -> Tuple[List[Polynomial], Polynomial]:
    """Multivariate division: ``f = sum q_i * g_i + r`` with ``r`` fully reduced.

    Divisors need not be monic; quotients are returned for the given divisors.
    """
    sig = f.signature
    for g in divisors:
        if g.signature != sig:
            raise SignatureMismatch("divisor over a different signature")
    nz = [g for g in divisors if g]
    ds = [_Divisor(g.lm, _monic_terms(g.terms, g.lm)) for g in nz]
    qs: List[Terms] = [{} for _ in ds]
    rem = _reduce_terms(f.terms, ds, _heap_key(sig.order), quotients=qs)
    # quotients were taken against the monic divisors; rescale
    out = []
    it = iter(zip(qs, nz))
    for g in divisors:
        if not g:
            out.append(sig.zero())
            continue
        q, gg = next(it)
        inv = scalar_inverse(gg.lc)
        out.append(Polynomial._raw(sig, {m: c * inv for m, c in q.items()}))
    return out, Polynomial._raw(sig, rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = monomial_lcm(f.lm, g.lm)
    a = f.mul_term(monomial_div(lcm, f.lm), scalar_inverse(f.lc))
    b = g.mul_term(monomial_div(lcm, g.lm), scalar_inverse(g.lc))
    return a - b


@dataclass(frozen=True)
class GroebnerBasis:
    """A Groebner basis; ``reduced`` marks the unique reduced form."""

    signature: RingSignature
    generators: Tuple[Polynomial, ...]
    reduced: bool = True
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.signature != self.signature:
                raise SignatureMismatch("basis element over a different signature")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_monomials(self) -> List[Monomial]:
        return [g.lm for g in self.generators]

    def _divisors(self) -> List[_Divisor]:
        cached = self.stats.get("_divisors")
        if cached is None:
            cached = [_Divisor(g.lm, _monic_terms(g.terms, g.lm)) for g in self.generators]
            self.stats["_divisors"] = cached
        return cached

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def is_unit(self) -> bool:
        return ideal_is_unit(self)

    def is_standard(self, m: Monomial) -> bool:
        return not any(monomial_divides(lm, m) for lm in self.leading_monomials())


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` (canonical for a Groebner basis)."""
    if f.signature != basis.signature:
        raise SignatureMismatch("polynomial and basis over different signatures")
    rem = _reduce_terms(f.terms, basis._divisors(), _heap_key(basis.signature.order))
    return Polynomial._raw(f.signature, rem)


def ideal_member(f: Polynomial, basis: GroebnerBasis) -> bool:
    return normal_form(f, basis).is_zero()


def ideal_is_unit(basis: GroebnerBasis) -> bool:
    """True iff the basis contains a non-zero constant (the ideal is everything)."""
    return any(g and g.is_constant() for g in basis.generators)


# Buchberger ----------------------------------------------------------------

@dataclass
class _Pair:
    i: int
    j: int
    lcm: Monomial


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _gm_update(pairs: List[_Pair], lms: List[Monomial], active: List[int],
               new: int) -> Tuple[List[_Pair], List[int]]:
    """Gebauer-Moeller installation of generator ``new`` (Becker-Weispfenning UPDATE)."""
    h = lms[new]
    fresh = [(i, monomial_lcm(lms[i], h)) for i in active]
    accepted: List[Tuple[int, Monomial]] = []
    while fresh:
        i, lcm = fresh.pop(0)
        if _coprime(lms[i], h) or not any(
                monomial_divides(other, lcm) for _, other in fresh + accepted):
            accepted.append((i, lcm))
    new_pairs = [_Pair(i, new, lcm) for i, lcm in accepted if not _coprime(lms[i], h)]
    kept = []
    for p in pairs:
        if (not monomial_divides(h, p.lcm)
                or monomial_lcm(lms[p.i], h) == p.lcm
                or monomial_lcm(lms[p.j], h) == p.lcm):
            kept.append(p)
    new_active = [i for i in active if not monomial_divides(h, lms[i])]
    new_active.append(new)
    return kept + new_pairs, new_active


def buchberger(generators: Sequence[Polynomial], signature: RingSignature | None = None,
               *, deadline: float | None = None, max_seconds: float | None = None
               ) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    ``max_seconds`` (or an absolute ``deadline`` from ``time.monotonic``)
    bounds the run; exceeding it raises :class:`GroebnerTimeout`.
    """
    gens = list(generators)
    if signature is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit signature")
        signature = gens[0].signature
    for g in gens:
        if g.signature != signature:
            raise SignatureMismatch("generators over different signatures")
    if max_seconds is not None:
        limit = time.monotonic() + max_seconds
        deadline = limit if deadline is None else min(deadline, limit)
    hk = _heap_key(signature.order)
    key = signature.key

    polys: List[Terms] = []
    lms: List[Optional[Monomial]] = []
    active: List[int] = []
    pairs: List[_Pair] = []
    stats = {"pairs_reduced": 0, "zero_reductions": 0}

    def install(terms: Terms):
        lm = max(terms, key=key)
        terms = _monic_terms(terms, lm)
        polys.append(terms)
        lms.append(lm)
        nonlocal pairs, active
        pairs, active = _gm_update(pairs, lms, active, len(polys) - 1)

    # inter-reduce the input first; sorting makes the run order-independent
    start = [g for g in gens if g]
    start.sort(key=lambda g: key(g.lm))
    for g in start:
        divs = [_Divisor(lms[i], polys[i]) for i in active]
        r = _reduce_terms(g.terms, divs, hk)
        if r:
            if all(not any(m) for m in r):
                return GroebnerBasis(signature, [signature.one()], True, stats)
            install(r)

    while pairs:
        if deadline is not None and time.monotonic() > deadline:
            raise GroebnerTimeout("Groebner basis computation exceeded its time budget")
        # normal strategy: smallest lcm w.r.t. the order
        best = min(range(len(pairs)), key=lambda k: (key(pairs[k].lcm), pairs[k].j, pairs[k].i))
        p = pairs.pop(best)
        fi, fj = polys[p.i], polys[p.j]
        sp: Terms = {}
        qi = monomial_div(p.lcm, lms[p.i])
        qj = monomial_div(p.lcm, lms[p.j])
        for m, c in fi.items():
            sp[monomial_mul(m, qi)] = c
        for m, c in fj.items():
            nm = monomial_mul(m, qj)
            s = sp.get(nm)
            if s is None:
                sp[nm] = -c
            else:
                s = s - c
                if s == 0:
                    del sp[nm]
                else:
                    sp[nm] = s
        stats["pairs_reduced"] += 1
        divs = [_Divisor(lms[i], polys[i]) for i in active]
        r = _reduce_terms(sp, divs, hk)
        if not r:
            stats["zero_reductions"] += 1
            continue
        if all(not any(m) for m in r):
            return GroebnerBasis(signature, [signature.one()], True, stats)
        install(r)

    basis = [Polynomial._raw(signature, polys[i]) for i in active]
    return GroebnerBasis(signature, _reduce_basis(basis, hk, key), True, stats)


def _reduce_basis(basis: List[Polynomial], hk, key) -> List[Polynomial]:
    # minimal basis: drop elements whose lm is divisible by another's
    minimal: List[Polynomial] = []
    for g in sorted(basis, key=lambda g: key(g.lm)):
        if not any(monomial_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = [_Divisor(h.lm, _monic_terms(h.terms, h.lm)) for k, h in enumerate(minimal)
                  if k != idx]
        lm = g.lm
        tail = {m: c for m, c in g.terms.items() if m != lm}
        r = _reduce_terms(tail, others, hk)
        r[lm] = g.terms[lm]
        out.append(Polynomial._raw(g.signature, _monic_terms(r, lm)))
    out.sort(key=lambda g: key(g.lm), reverse=True)
    return out


def is_groebner(polys: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    polys = [p for p in polys if p]
    if not polys:
        return True
    sig = polys[0].signature
    ds = [_Divisor(g.lm, _monic_terms(g.terms, g.lm)) for g in polys]
    hk = _heap_key(sig.order)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j])
            if _reduce_terms(s.terms, ds, hk):
                return False
    return True


def is_reduced(basis: GroebnerBasis) -> bool:
    lms = basis.leading_monomials()
    for g in basis.generators:
        if g.lc != 1:
            return False
        for m in g.terms:
            for h in basis.generators:
                if h is not g and monomial_divides(h.lm, m):
                    return False
    return True
