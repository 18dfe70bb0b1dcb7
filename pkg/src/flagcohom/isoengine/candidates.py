"""Lines that can possibly be equivalent to a given integral line.

If H*_u' and H*_u are isomorphic, then <u> lies in the W-orbit of <u'>, in the
orbit of one of the special lines <x1>, <x2>, <x1 - x2>, <x1 + 2 x2>,
<2 x1 + x2>, or in the orbit of one of at most two further lines obtained
from the zero divisors x_+ and x_- of the flag ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from ..exactpoly import linalg
from ..exactpoly.scalar import Scalar, as_scalar
from .endo import X_MINUS, X_PLUS
from .weyl import (
    SPECIAL_LINES,
    WEYL_GROUP,
    IntegralLine,
    line_through,
    weyl_orbit_of_line,
)


@dataclass(frozen=True)
class ExtraCandidate:
    """v' + 2*lam1*x_s, where v' = lam2*x_(-s) - lam1*x_s, for the sign s."""

    sign: str
    lam1: Scalar
    lam2: Scalar
    vector: Tuple[Scalar, Scalar]
    line: Optional[IntegralLine]

    @property
    def integral(self) -> bool:
        return self.line is not None


def extra_candidate_lines(v) -> List[ExtraCandidate]:
    vec = tuple(as_scalar(c) for c in (v.vector if isinstance(v, IntegralLine) else v))
    if vec[0] == 0 and vec[1] == 0:
        raise ValueError("extra candidates need a non-zero class")
    out = []
    for sign, xs, xo in (("+", X_PLUS, X_MINUS), ("-", X_MINUS, X_PLUS)):
        # lam2 * xo - lam1 * xs = v
        a = [[xo[0], -xs[0]], [xo[1], -xs[1]]]
        lam2, lam1 = linalg.solve(a, list(vec))
        cand = tuple(vec[i] + 2 * lam1 * xs[i] for i in range(2))
        line = None if cand[0] == 0 and cand[1] == 0 else line_through(cand)
        out.append(ExtraCandidate(sign, lam1, lam2, cand, line))
    return out


@dataclass(frozen=True)
class CandidateSet:
    lines: FrozenSet[IntegralLine]
    own_orbit: FrozenSet[IntegralLine]
    special: FrozenSet[IntegralLine]
    extra: FrozenSet[IntegralLine]
    non_integral: Tuple[Tuple[Scalar, Scalar], ...]

    def __contains__(self, line) -> bool:
        return line in self.lines

    def __len__(self) -> int:
        return len(self.lines)


def special_orbits() -> FrozenSet[IntegralLine]:
    out = set()
    for s in SPECIAL_LINES:
        out |= weyl_orbit_of_line(s)
    return frozenset(out)


def candidate_line_set(u: IntegralLine) -> CandidateSet:
    own = weyl_orbit_of_line(u)
    special = special_orbits()
    extra = set()
    non_integral = []
    for w in WEYL_GROUP:
        for cand in extra_candidate_lines(w.act(u.vector)):
            if cand.line is not None:
                extra |= weyl_orbit_of_line(cand.line)
            else:
                non_integral.append(cand.vector)
    extra = frozenset(extra)
    return CandidateSet(own | special | extra, own, special, extra, tuple(non_integral))
