"""Ring endomorphisms of H*(SU(3)/T) and its zero divisors in degree 2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from ..cohomring import (
    DegreeTwoMatrix,
    GradedRingPresentation,
    flag_ring,
    verify_graded_hom,
)
from ..exactpoly import linalg
from ..exactpoly.scalar import OMEGA, QQ, Scalar, as_scalar, conjugate, make_scalar
from .weyl import WEYL_GROUP, WeylElement

DIAGONAL = "diagonal"
RANK_ONE = "rank-one-sigma"

# x_pm = x1 + (1 pm sqrt(-3))/2 * x2
X_PLUS: Tuple[Scalar, Scalar] = (QQ(1), make_scalar(QQ(1, 2), QQ(1, 2)))
X_MINUS: Tuple[Scalar, Scalar] = (QQ(1), make_scalar(QQ(1, 2), QQ(-1, 2)))
CUBE_ROOTS = (OMEGA, conjugate(OMEGA))  # the two roots of s^2 + s + 1


class NotAnEndomorphism(ValueError):
    pass


def endo_necessary_conditions(m: DegreeTwoMatrix) -> bool:
    """a11*a21*(a11 - a21) = 0 and a12*a22*(a12 - a22) = 0."""
    (a11, a12), (a21, a22) = m.rows
    return a11 * a21 * (a11 - a21) == 0 and a12 * a22 * (a12 - a22) == 0


def canonical_form(kind: str, sigma: Scalar | None = None) -> DegreeTwoMatrix:
    if kind == DIAGONAL:
        return DegreeTwoMatrix.identity(2)
    if kind == RANK_ONE:
        return DegreeTwoMatrix(((QQ(1), sigma), (QQ(0), QQ(0))))
    raise ValueError(kind)


@dataclass(frozen=True)
class CanonicalEndo:
    """``left.matrix @ m @ right.matrix == scale * canonical_form(form, sigma)``."""

    left: WeylElement
    right: WeylElement
    scale: Scalar
    form: str
    sigma: Scalar | None = None

    def matrix(self) -> DegreeTwoMatrix:
        return canonical_form(self.form, self.sigma).scale(self.scale)


def _match_form(p: DegreeTwoMatrix):
    (p11, p12), (p21, p22) = p.rows
    if p12 == 0 and p21 == 0 and p11 != 0 and p11 == p22:
        return DIAGONAL, p11, None
    if p21 == 0 and p22 == 0 and p11 != 0:
        s = p12 / p11
        if s * s + s + 1 == 0:
            return RANK_ONE, p11, s
    return None


def canonicalize_endo(m: DegreeTwoMatrix, ring: GradedRingPresentation | None = None
                      ) -> CanonicalEndo:
    """Weyl elements w1, w2 and a scalar bringing ``m`` to a canonical form.

    The search runs over W x W in a fixed order and the first match wins, so
    the output is deterministic.
    """
    if m.size != 2:
        raise NotAnEndomorphism("expected a 2x2 matrix")
    if all(c == 0 for r in m.rows for c in r):
        raise NotAnEndomorphism("the zero map has no canonical form")
    ring = ring or flag_ring("Q" if m.is_rational() else "Qsqrtm3")
    if not verify_graded_hom(ring, ring, m).ok:
        raise NotAnEndomorphism(f"{m} is not a ring endomorphism of the flag ring")
    for w1 in WEYL_GROUP:
        for w2 in WEYL_GROUP:
            hit = _match_form(w1.matrix @ m @ w2.matrix)
            if hit is not None:
                form, lam, sigma = hit
                return CanonicalEndo(w1, w2, lam, form, sigma)
    raise AssertionError(f"no canonical form found for endomorphism {m}")


def induced_base_endo(src: GradedRingPresentation, dst: GradedRingPresentation,
                      m: DegreeTwoMatrix, *, check: bool = True) -> DegreeTwoMatrix:
    """Matrix of s* . Phi . pi* on H^2 of the base (the x-block of ``m``)."""
    if m.size != 3:
        raise ValueError("expected a 3x3 matrix on (x1, x2, y)")
    if check and not verify_graded_hom(src, dst, m).ok:
        raise NotAnEndomorphism("matrix does not define a ring homomorphism")
    return DegreeTwoMatrix(tuple(tuple(m.rows[i][j] for j in range(2)) for i in range(2)))


# zero divisors in degree 2 ----------------------------------------------------------

def product_coordinates(z1, z2, ring: GradedRingPresentation | None = None) -> List[Scalar]:
    """Coordinates of z1 * z2 in the degree-4 basis of the flag ring."""
    ring = ring or flag_ring("Qsqrtm3")
    x1, x2 = ring.gen("x1"), ring.gen("x2")
    p1 = x1.scale(as_scalar(z1[0])) + x2.scale(as_scalar(z1[1]))
    p2 = x1.scale(as_scalar(z2[0])) + x2.scale(as_scalar(z2[1]))
    return ring.coordinates(p1 * p2, 4)


def multiplication_matrix(z1, ring: GradedRingPresentation | None = None) -> List[List[Scalar]]:
    """Matrix of z -> z1 * z from degree 2 to degree 4 (columns: x1, x2)."""
    ring = ring or flag_ring("Qsqrtm3")
    cols = [product_coordinates(z1, e, ring) for e in ((1, 0), (0, 1))]
    return [[cols[j][i] for j in range(2)] for i in range(len(cols[0]))]


def annihilator_in_degree_two(z1, ring: GradedRingPresentation | None = None) -> List[List[Scalar]]:
    """Basis of {z2 in H^2 : z1 * z2 = 0}."""
    return linalg.nullspace(multiplication_matrix(z1, ring), 2)


def proportional(u, v) -> bool:
    u0, u1 = (as_scalar(c) for c in u)
    v0, v1 = (as_scalar(c) for c in v)
    return u0 * v1 - u1 * v0 == 0
