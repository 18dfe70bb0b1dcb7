"""The Weyl group S_3 acting on H^2 of the flag manifold, and integral lines."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, List, Sequence, Tuple

from ..cohomring import DegreeTwoMatrix
from ..exactpoly.scalar import QQ, Scalar, as_scalar, is_rational

Permutation = Tuple[int, int, int]  # images of 1, 2, 3

# cycle notation -> permutation, in the order the six elements are usually listed
CYCLES: Dict[str, Permutation] = {
    "(1)": (1, 2, 3),
    "(12)": (2, 1, 3),
    "(13)": (3, 2, 1),
    "(23)": (1, 3, 2),
    "(123)": (2, 3, 1),
    "(321)": (3, 1, 2),
}

# x_i -> x_sigma(i) with x3 = -x1 - x2; columns are the images of x1, x2
_MATRICES: Dict[Permutation, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    (1, 2, 3): ((1, 0), (0, 1)),
    (2, 1, 3): ((0, 1), (1, 0)),
    (3, 2, 1): ((-1, 0), (-1, 1)),
    (1, 3, 2): ((1, -1), (0, -1)),
    (2, 3, 1): ((0, -1), (1, -1)),
    (3, 1, 2): ((-1, 1), (-1, 0)),
}


@dataclass(frozen=True)
class WeylElement:
    perm: Permutation
    matrix: DegreeTwoMatrix

    @property
    def name(self) -> str:
        return next(k for k, v in CYCLES.items() if v == self.perm)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (sigma * tau)(i) = sigma(tau(i)); matches matrix product
        return weyl_matrix(tuple(self.perm[other.perm[i] - 1] for i in range(3)))

    def inverse(self) -> "WeylElement":
        inv = [0, 0, 0]
        for i, p in enumerate(self.perm):
            inv[p - 1] = i + 1
        return weyl_matrix(tuple(inv))

    def act(self, vec: Sequence) -> Tuple[Scalar, Scalar]:
        """Image of the class ``vec[0]*x1 + vec[1]*x2``."""
        return self.matrix.apply(vec)

    def __repr__(self):
        return f"WeylElement{self.name}"


def weyl_matrix(perm) -> WeylElement:
    """Weyl element for a permutation tuple of (1, 2, 3) or a cycle string like ``"(12)"``."""
    if isinstance(perm, str):
        key = perm.replace(" ", "")
        if key == "(132)":
            key = "(321)"
        if key not in CYCLES:
            raise ValueError(f"unknown permutation {perm!r}")
        perm = CYCLES[key]
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != [1, 2, 3]:
        raise ValueError(f"not a permutation of 1, 2, 3: {perm}")
    return WeylElement(perm, DegreeTwoMatrix(_MATRICES[perm]))


WEYL_GROUP: Tuple[WeylElement, ...] = tuple(weyl_matrix(c) for c in CYCLES)
IDENTITY = WEYL_GROUP[0]


# integral lines --------------------------------------------------------------

@dataclass(frozen=True, order=True)
class IntegralLine:
    """C<a*x1 + b*x2> with (a, b) primitive and first non-zero entry positive."""

    a: int
    b: int

    def __post_init__(self):
        a, b = int(self.a), int(self.b)
        if a == 0 and b == 0:
            raise ValueError("the zero class spans no line")
        g = gcd(a, b)
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def vector(self) -> Tuple[int, int]:
        return (self.a, self.b)

    @classmethod
    def from_vector(cls, vec: Sequence) -> "IntegralLine":
        """Line through a rational (or rational-proportional) vector."""
        line = line_through(vec)
        if line is None:
            raise ValueError(f"{vec} does not span an integral line")
        return line

    def __str__(self):
        parts = []
        for c, v in ((self.a, "x1"), (self.b, "x2")):
            if c == 0:
                continue
            mag = abs(c)
            body = v if mag == 1 else f"{mag}*{v}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "<" + "".join(parts) + ">"


def line_through(vec: Sequence) -> IntegralLine | None:
    """Integral line spanned by ``vec`` over C, or None if it is not integral."""
    a, b = (as_scalar(c) for c in vec)
    if a == 0 and b == 0:
        raise ValueError("the zero class spans no line")
    if a != 0:
        r = b / a
        if not is_rational(r):
            return None
        r = QQ(r)
        return IntegralLine(int(r.denominator), int(r.numerator))
    return IntegralLine(0, 1)


def act_on_line(w: WeylElement, line: IntegralLine) -> IntegralLine:
    return IntegralLine.from_vector(w.act(line.vector))


def weyl_orbit_of_line(line: IntegralLine) -> FrozenSet[IntegralLine]:
    return frozenset(act_on_line(w, line) for w in WEYL_GROUP)


def orbit_representative(line: IntegralLine) -> IntegralLine:
    """Canonical (smallest) member of the W-orbit."""
    return min(weyl_orbit_of_line(line))


def transporting_element(src_vec: Sequence, dst_vec: Sequence
                         ) -> Tuple[WeylElement, Scalar] | None:
    """Some (w, lam) with dst = lam * w(src), first in group order; None if none."""
    d = tuple(as_scalar(c) for c in dst_vec)
    for w in WEYL_GROUP:
        img = w.act(src_vec)
        lam = _proportionality(img, d)
        if lam is not None:
            return w, lam
    return None


def _proportionality(u: Sequence, v: Sequence) -> Scalar | None:
    """lam with v = lam * u, if u, v are non-zero and proportional."""
    u0, u1 = u
    v0, v1 = v
    if u0 * v1 - u1 * v0 != 0:
        return None
    if u0 != 0:
        lam = v0 / u0
    elif u1 != 0:
        lam = v1 / u1
    else:
        return None
    return lam if lam != 0 else None


SPECIAL_LINES: Tuple[IntegralLine, ...] = (
    IntegralLine(1, 0), IntegralLine(0, 1), IntegralLine(1, -1), IntegralLine(1, 2),
    IntegralLine(2, 1))
