"""Polynomial systems whose complex solutions are the graded isomorphisms src -> dst.

Unknowns are the entries ``a_ij`` of the degree-2 matrix (column j is the image
of the j-th generator of ``src``) plus an auxiliary ``t`` with
``t * det(a) - 1 = 0`` for invertibility.  Each src relation is mapped,
reduced modulo dst, and every coefficient against dst's graded basis becomes
one equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ..cohomring import DegreeTwoMatrix, GradedRingPresentation, PresentationError
from ..exactpoly import Polynomial, RingSignature
from ..exactpoly.poly import GREVLEX
from ..exactpoly.scalar import QQ


class DimensionMismatch(PresentationError):
    """Source and target have different graded dimensions."""


def unknown_names(n: int) -> List[str]:
    return [f"a{i + 1}{j + 1}" for i in range(n) for j in range(n)]


def determinant_polynomial(entries: Sequence[Sequence[Polynomial]]) -> Polynomial:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = entries[0][j] * determinant_polynomial(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


@dataclass
class ConstraintSystem:
    """Equations over ``signature`` (unknowns ``a_ij`` and ``t``) with provenance."""

    signature: RingSignature
    size: int
    equations: List[Polynomial]
    provenance: List[str]
    src: GradedRingPresentation
    dst: GradedRingPresentation

    def matrix_variables(self) -> List[str]:
        return unknown_names(self.size)

    def assignment(self, m: DegreeTwoMatrix) -> List:
        """Point of the unknowns for a concrete matrix (t = 1/det)."""
        vals = [m.rows[i][j] for i in range(self.size) for j in range(self.size)]
        d = m.det()
        return vals + [(1 / d) if d != 0 else QQ(0)]

    def residuals(self, m: DegreeTwoMatrix) -> List:
        point = self.assignment(m)
        return [eq.evaluate(point) for eq in self.equations]

    def is_satisfied_by(self, m: DegreeTwoMatrix) -> bool:
        return all(r == 0 for r in self.residuals(m))

    def matrix_from_point(self, point: Dict[str, object]) -> DegreeTwoMatrix:
        n = self.size
        return DegreeTwoMatrix(tuple(tuple(point[f"a{i + 1}{j + 1}"] for j in range(n))
                                     for i in range(n)))


def build_iso_constraints(src: GradedRingPresentation, dst: GradedRingPresentation,
                          *, invertibility: bool = True) -> ConstraintSystem:
    if src.dimensions() != dst.dimensions():
        raise DimensionMismatch(f"graded dimensions differ: {src.dimensions()} vs "
                                f"{dst.dimensions()}")
    if not (src.is_degree_two_generated() and dst.is_degree_two_generated()):
        raise PresentationError("constraint systems need rings generated in degree 2")
    n = src.signature.nvars
    if dst.signature.nvars != n:
        raise DimensionMismatch("different numbers of degree-2 generators")
    names = unknown_names(n)
    usig = RingSignature(tuple(names) + ("t",), GREVLEX)
    # combined ring: dst generators followed by the unknowns
    csig = RingSignature(dst.variables + tuple(names), GREVLEX)
    nd = dst.signature.nvars
    unk = {v: csig.gen(v) for v in names}
    dgen = {v: csig.gen(v) for v in dst.variables}
    by_name = {}
    for j, sname in enumerate(src.matrix_basis):
        img = csig.zero()
        for i, dname in enumerate(dst.matrix_basis):
            img = img + unk[f"a{i + 1}{j + 1}"] * dgen[dname]
        by_name[sname] = img
    images = [by_name[v] for v in src.variables]

    nf_cache: Dict[tuple, Polynomial] = {}

    def nf(md: tuple) -> Polynomial:
        if md not in nf_cache:
            nf_cache[md] = dst.reduce(Polynomial(dst.signature, {md: QQ(1)}))
        return nf_cache[md]

    equations: List[Polynomial] = []
    provenance: List[str] = []
    for k, rel in enumerate(src.relations):
        degree = src.degree_of(next(iter(rel.terms)))
        mons = dst.graded_basis(degree)
        acc: Dict[tuple, Dict[tuple, object]] = {b: {} for b in mons}
        image = rel.substitute(images, csig)
        for m, c in image.terms.items():
            md, mu = m[:nd], m[nd:] + (0,)
            for b, cb in nf(md).terms.items():
                slot = acc[b]
                v = slot.get(mu)
                slot[mu] = c * cb if v is None else v + c * cb
        for b in mons:
            # identically zero equations are kept so the count is predictable
            equations.append(Polynomial(usig, acc[b]))
            provenance.append(f"relation {k} ({rel}) coefficient of "
                              f"{Polynomial(dst.signature, {b: QQ(1)})}")
    if invertibility:
        mat = [[usig.gen(f"a{i + 1}{j + 1}") for j in range(n)] for i in range(n)]
        det = determinant_polynomial(mat)
        equations.append(usig.gen("t") * det - usig.one())
        provenance.append("t*det - 1")
    return ConstraintSystem(usig, n, equations, provenance, src, dst)
