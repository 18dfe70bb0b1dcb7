"""The three manifold families and their number-theoretic invariants.

* M_{k,l}: H*_u with u = -2k x1 - 2l x2 over the flag manifold.
* Bott manifolds over CP^2 with roots {0, d x, e x}; the Eisenstein norm
  d^2 - d e + e^2 up to rational squares separates them over Q.
* Bott manifolds over CP^3 with roots {l1 x, l2 x, l3 x}; the normalized
  difference multiset separates them over C.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, isqrt
from typing import Dict, List, Optional, Tuple

from .cohomring import (
    DegreeTwoMatrix,
    GradedRingPresentation,
    PresentationError,
    hu_ring,
    is_isomorphism,
    projective_space_ring,
    split_bundle_ring,
)
from .exactpoly.scalar import QQ
from .isoengine.decide import CERT_INVARIANT, ISO, NONISO, UNKNOWN, IsoVerdict, describe
from .isoengine.weyl import IntegralLine

CP2_RATIONAL = "cp2-rational"
CP3_COMPLEX = "cp3-complex"
FAMILIES = (CP2_RATIONAL, CP3_COMPLEX)


class FamilyParameterError(ValueError):
    pass


# M_{k,l} ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MklParams:
    k: int
    l: int

    def __post_init__(self):
        if self.k == 0 and self.l == 0:
            raise FamilyParameterError("(k, l) = (0, 0) is excluded")

    @property
    def in_theorem_family(self) -> bool:
        """k, l coprime positive integers."""
        return self.k >= 1 and self.l >= 1 and gcd(self.k, self.l) == 1


def mkl_u_class(p: MklParams) -> Tuple[Tuple[int, int], IntegralLine]:
    """u = c1(L_1^{-2k} (x) L_2^{-2l}) = -2k x1 - 2l x2 and its line <k x1 + l x2>."""
    return (-2 * p.k, -2 * p.l), IntegralLine(p.k, p.l)


def mkl_ring(p: MklParams, field: str = "Q") -> GradedRingPresentation:
    u, _ = mkl_u_class(p)
    return hu_ring(u, field)


# CP^2 family -----------------------------------------------------------------------

@dataclass(frozen=True)
class Cp2BottParams:
    d: int
    e: int

    @property
    def p(self) -> int:
        return self.d * self.d - self.d * self.e + self.e * self.e


def cp2_bott_ring(p: Cp2BottParams, field: str = "Q") -> GradedRingPresentation:
    base = projective_space_ring(2, field)
    x = base.gen("x")
    return split_bundle_ring(base, [0, x.scale(p.d), x.scale(p.e)], field,
                             meta={"kind": "cp2-bott", "label": f"CP2-bott(d={p.d}, e={p.e})"})


# CP^3 family -----------------------------------------------------------------------

@dataclass(frozen=True)
class Cp3BottParams:
    l1: int
    l2: int
    l3: int

    @property
    def values(self) -> Tuple[int, int, int]:
        return (self.l1, self.l2, self.l3)

    @property
    def distinct(self) -> bool:
        return len(set(self.values)) == 3


def cp3_bott_ring(p: Cp3BottParams, field: str = "Q") -> GradedRingPresentation:
    base = projective_space_ring(3, field)
    x = base.gen("x")
    label = f"CP3-bott({p.l1}, {p.l2}, {p.l3})"
    return split_bundle_ring(base, [x.scale(v) if v else 0 for v in p.values], field,
                             meta={"kind": "cp3-bott", "label": label})


# number theory ---------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_1_mod_3(limit: int) -> List[int]:
    if limit < 2:
        raise ValueError("limit must be at least 2")
    return [n for n in range(7, limit + 1, 6) if is_prime(n)]


def represent_eisenstein(p: int) -> Tuple[int, int]:
    """Lexicographically least (d, e), d >= e >= 0, with d^2 - d e + e^2 = p."""
    if not is_prime(p) or p % 3 != 1:
        raise FamilyParameterError(f"{p} is not a prime congruent to 1 mod 3")
    bound = isqrt(4 * p // 3) + 1  # covers ceil(2 sqrt(p/3))
    for d in range(bound + 1):
        for e in range(d + 1):
            if d * d - d * e + e * e == p:
                return d, e
    raise AssertionError(f"no representation found for {p}")


def squarefree_part(n: int) -> int:
    if n == 0:
        raise ValueError("squarefree part of 0 is undefined")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    f = 2
    while f * f <= n:
        count = 0
        while n % f == 0:
            n //= f
            count += 1
        if count % 2:
            out *= f
        f += 1
    return sign * out * n


def cp2_rational_invariant(p: Cp2BottParams) -> int:
    if p.d == 0 and p.e == 0:
        raise FamilyParameterError("(d, e) = (0, 0) has no invariant")
    return squarefree_part(p.p)


def cp3_difference_invariant(p: Cp3BottParams) -> Tuple[int, ...]:
    if not p.distinct:
        raise FamilyParameterError(f"parameters {p.values} are not pairwise distinct")
    diffs = [abs(a - b) for a, b in combinations(p.values, 2)]
    g = 0
    for v in diffs:
        g = gcd(g, v)
    return tuple(sorted(v // g for v in diffs))


# structured decisions ----------------------------------------------------------------

def _bundle_witness(alpha, beta, a=1) -> DegreeTwoMatrix:
    # basis (x, y): x -> a x, y -> alpha x + beta y
    return DegreeTwoMatrix.from_columns([(a, 0), (alpha, beta)])


def _cp2_witness(lhs: Cp2BottParams, rhs: Cp2BottParams) -> Optional[DegreeTwoMatrix]:
    """x -> x, y -> beta y + alpha x with beta^2 = p/p~, matching the root sums."""
    ratio = QQ(lhs.p, rhs.p)
    num, den = ratio.numerator, ratio.denominator
    if isqrt(num) ** 2 != num or isqrt(den) ** 2 != den:
        return None
    beta = QQ(isqrt(num), isqrt(den))
    alpha = (beta * (rhs.d + rhs.e) - (lhs.d + lhs.e)) / 3
    return _bundle_witness(alpha, beta)


def _cp3_witness(lhs: Cp3BottParams, rhs: Cp3BottParams) -> Optional[DegreeTwoMatrix]:
    """x -> s x, y -> y + r x where t -> s t + r maps the lhs roots onto the rhs roots."""
    src, dst = sorted(lhs.values), sorted(rhs.values)
    for target in (dst, dst[::-1]):
        s = QQ(target[1] - target[0], src[1] - src[0])
        r = target[0] - s * src[0]
        if all(s * a + r == b for a, b in zip(src, target)):
            return _bundle_witness(r, 1, s)
    return None


def family_iso_test(family: str, lhs, rhs) -> IsoVerdict:
    """Structured decision inside one family; Unknown when no witness is found."""
    if family == CP2_RATIONAL:
        for q in (lhs, rhs):
            if q.d == 0 and q.e == 0:
                raise FamilyParameterError("cp2 test needs (d, e) != (0, 0)")
        inv = (cp2_rational_invariant(lhs), cp2_rational_invariant(rhs))
        src, dst = cp2_bott_ring(lhs), cp2_bott_ring(rhs)
        witness = _cp2_witness(lhs, rhs) if inv[0] == inv[1] else None
    elif family == CP3_COMPLEX:
        for q in (lhs, rhs):
            if not q.distinct:
                raise FamilyParameterError("cp3 test needs pairwise distinct parameters")
        inv = (cp3_difference_invariant(lhs), cp3_difference_invariant(rhs))
        src, dst = cp3_bott_ring(lhs), cp3_bott_ring(rhs)
        witness = _cp3_witness(lhs, rhs) if inv[0] == inv[1] else None
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    method = f"family-{family}"
    labels = dict(lhs=describe(src), rhs=describe(dst))
    if inv[0] != inv[1]:
        return IsoVerdict(NONISO, certificate=CERT_INVARIANT, method=method,
                          detail=f"invariants {inv[0]} vs {inv[1]}", **labels)
    if witness is not None and is_isomorphism(src, dst, witness):
        return IsoVerdict(ISO, witness, method=method, detail="diagonal witness", **labels)
    return IsoVerdict(UNKNOWN, method=method, detail="invariants agree, no witness", **labels)


def invariant_of(family: str, params):
    if family == CP2_RATIONAL:
        return cp2_rational_invariant(params)
    if family == CP3_COMPLEX:
        return list(cp3_difference_invariant(params))
    raise ValueError(family)


def sweep_row(family: str, lhs, rhs) -> Dict:
    v = family_iso_test(family, lhs, rhs)
    return {"family": family, "lhs": list(_values(lhs)), "rhs": list(_values(rhs)),
            "verdict": v.tag, "invariant_lhs": invariant_of(family, lhs),
            "invariant_rhs": invariant_of(family, rhs), "method": v.method}


def _values(params) -> Tuple[int, ...]:
    if isinstance(params, Cp2BottParams):
        return (params.d, params.e)
    if isinstance(params, Cp3BottParams):
        return params.values
    if isinstance(params, MklParams):
        return (params.k, params.l)
    raise TypeError(params)


def cp2_prime_family(limit: int) -> List[Tuple[int, Cp2BottParams]]:
    return [(p, Cp2BottParams(*represent_eisenstein(p))) for p in primes_1_mod_3(limit)]


def cp2_sweep(params: List[Cp2BottParams]) -> List[Dict]:
    return [sweep_row(CP2_RATIONAL, a, b) for a, b in combinations(params, 2)]


def cp3_family(ks) -> List[Cp3BottParams]:
    """The family {0, 1, k}."""
    return [Cp3BottParams(0, 1, k) for k in ks]


def cp3_sweep(params: List[Cp3BottParams]) -> List[Dict]:
    return [sweep_row(CP3_COMPLEX, a, b) for a, b in combinations(params, 2)]


__all__ = [
    "CP2_RATIONAL", "CP3_COMPLEX", "Cp2BottParams", "Cp3BottParams", "FamilyParameterError",
    "MklParams", "cp2_bott_ring", "cp2_prime_family", "cp2_rational_invariant", "cp2_sweep",
    "cp3_bott_ring", "cp3_difference_invariant", "cp3_family", "cp3_sweep", "family_iso_test",
    "is_prime", "mkl_ring", "mkl_u_class", "primes_1_mod_3", "represent_eisenstein",
    "squarefree_part", "sweep_row", "PresentationError",
]
