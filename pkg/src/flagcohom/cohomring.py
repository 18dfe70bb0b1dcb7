"""Graded ring presentations for the cohomology rings in play.

Every ring here is generated in cohomological degree 2: the flag manifold
SU(3)/T, the projective spaces CP^m, and projective bundles of split bundles
over them (Leray-Hirsch).  A presentation stores its relations together with
a reduced Groebner basis, so normal forms, graded bases and dimensions are
cheap.

Convention: the first Chern classes of the two tautological line bundles over
the flag manifold are identified with the generators ``x1`` and ``x2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Dict, Iterable, List, Sequence, Tuple

from .exactpoly import (
    GREVLEX,
    GroebnerBasis,
    Monomial,
    Polynomial,
    RingSignature,
    buchberger,
    format_scalar,
    normal_form,
    parse_polynomial,
)
from .exactpoly import linalg
from .exactpoly.poly import monomial_divides
from .exactpoly.scalar import QQ, Scalar, as_scalar, is_rational

CONVENTION = "c1(L_i)=x_i"
FIELDS = ("Q", "Qsqrtm3")


class PresentationError(ValueError):
    pass


def _field_of(polys: Iterable[Polynomial]) -> str:
    return "Q" if all(p.is_rational() for p in polys) else "Qsqrtm3"


@dataclass(frozen=True, eq=False)
class GradedRingPresentation:
    """Generators with even degrees, homogeneous relations, coefficient field.

    ``matrix_basis`` fixes the generator order used by degree-2 matrices (the
    signature order by default).  ``meta`` carries descriptive data (ring
    kind, parameters) and does not take part in ring equality.
    """

    signature: RingSignature
    degrees: Tuple[int, ...]
    relations: Tuple[Polynomial, ...]
    field: str = "Q"
    meta: dict = dc_field(default_factory=dict)
    matrix_basis: Tuple[str, ...] | None = None
    basis: GroebnerBasis = dc_field(init=False, repr=False)

    def __post_init__(self):
        if self.matrix_basis is None:
            object.__setattr__(self, "matrix_basis", self.signature.variables)
        object.__setattr__(self, "matrix_basis", tuple(self.matrix_basis))
        if sorted(self.matrix_basis) != sorted(self.signature.variables):
            raise PresentationError("matrix basis must list every generator once")
        object.__setattr__(self, "degrees", tuple(self.degrees))
        object.__setattr__(self, "relations", tuple(self.relations))
        if self.field not in FIELDS:
            raise PresentationError(f"unknown field tag {self.field!r}")
        if len(self.degrees) != self.signature.nvars:
            raise PresentationError("one degree per generator required")
        if any(d <= 0 or d % 2 for d in self.degrees):
            raise PresentationError("generator degrees must be positive and even")
        for r in self.relations:
            if r.signature != self.signature:
                raise PresentationError("relation over a different signature")
            if not r.is_homogeneous(self.degrees):
                raise PresentationError(f"relation {r} is not homogeneous")
            if self.field == "Q" and not r.is_rational():
                raise PresentationError("relation has sqrt(-3) coefficients but field is Q")
        gb = buchberger(list(self.relations), self.signature)
        object.__setattr__(self, "basis", gb)
        lms = gb.leading_monomials()
        for i, v in enumerate(self.signature.variables):
            if not any(sum(m) == m[i] and m[i] > 0 for m in lms):
                raise PresentationError(f"quotient is infinite-dimensional (no pure power of {v})")

    # elements --------------------------------------------------------------

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.signature.variables

    def gen(self, name: str) -> Polynomial:
        return self.signature.gen(name)

    def element(self, text: str) -> Polynomial:
        return self.reduce(parse_polynomial(text, self.signature))

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.basis)

    def degree_of(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    # graded structure --------------------------------------------------------

    def graded_basis(self, degree: int) -> List[Monomial]:
        return graded_basis(self, degree)

    def top_degree(self) -> int:
        top = 0
        d = 0
        while d <= top + max(self.degrees):
            if self.graded_basis(d):
                top = d
            d += 2
        return top

    def dimensions(self) -> Tuple[int, ...]:
        """Dimensions in degrees 0, 2, ..., top."""
        return tuple(len(self.graded_basis(d)) for d in range(0, self.top_degree() + 1, 2))

    def total_dimension(self) -> int:
        return sum(self.dimensions())

    def coordinates(self, f: Polynomial, degree: int) -> List[Scalar]:
        """Coefficients of the normal form of ``f`` against ``graded_basis(degree)``."""
        nf = self.reduce(f)
        mons = self.graded_basis(degree)
        extra = [m for m in nf.terms if self.degree_of(m) != degree]
        if extra:
            raise PresentationError(f"{f} is not homogeneous of degree {degree}")
        return [nf.coefficient(m) for m in mons]

    def degree_two_generators(self) -> List[str]:
        return [v for v, d in zip(self.variables, self.degrees) if d == 2]

    def is_degree_two_generated(self) -> bool:
        return all(d == 2 for d in self.degrees)

    # serialization ------------------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "variables": list(self.variables),
            "degrees": list(self.degrees),
            "relations": [str(r) for r in self.relations],
            "field": self.field,
        }
        if self.matrix_basis != self.variables:
            out["matrix_basis"] = list(self.matrix_basis)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict, meta: dict | None = None) -> "GradedRingPresentation":
        sig = RingSignature(tuple(data["variables"]), data.get("order", GREVLEX))
        rels = [parse_polynomial(t, sig) for t in data["relations"]]
        return cls(sig, tuple(data["degrees"]), tuple(rels), data.get("field", "Q"),
                   dict(meta or {}), data.get("matrix_basis"))

    @classmethod
    def from_json(cls, text: str) -> "GradedRingPresentation":
        return cls.from_dict(json.loads(text))

    def same_presentation(self, other: "GradedRingPresentation") -> bool:
        return (self.signature == other.signature and self.degrees == other.degrees
                and self.field == other.field and self.matrix_basis == other.matrix_basis
                and self.basis.generators == other.basis.generators)

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relations)
        return f"Q{'(sqrt(-3))' if self.field != 'Q' else ''}[{', '.join(self.variables)}]/({rels})"


def graded_basis(pres: GradedRingPresentation, degree: int) -> List[Monomial]:
    """Standard monomials of cohomological ``degree``, descending in the order."""
    if degree < 0 or degree % 2:
        return []
    lms = pres.basis.leading_monomials()
    out: List[Monomial] = []
    n = pres.signature.nvars
    degs = pres.degrees

    def rec(i: int, remaining: int, prefix: List[int]):
        if i == n - 1:
            if remaining % degs[i] == 0:
                m = tuple(prefix + [remaining // degs[i]])
                if not any(monomial_divides(lm, m) for lm in lms):
                    out.append(m)
            return
        for e in range(remaining // degs[i], -1, -1):
            rec(i + 1, remaining - e * degs[i], prefix + [e])

    if n:
        rec(0, degree, [])
    key = pres.signature.key
    out.sort(key=key, reverse=True)
    return out


# ring constructors ------------------------------------------------------------

def flag_ring(field: str = "Q") -> GradedRingPresentation:
    """H*(SU(3)/T) = Q[x1, x2]/(x1^2 + x1 x2 + x2^2, x1^2 x2 + x1 x2^2)."""
    sig = RingSignature(("x1", "x2"))
    rels = (parse_polynomial("x1^2 + x1*x2 + x2^2", sig),
            parse_polynomial("x1^2*x2 + x1*x2^2", sig))
    return GradedRingPresentation(sig, (2, 2), rels, field,
                                  {"kind": "flag", "convention": CONVENTION})


def projective_space_ring(m: int, field: str = "Q") -> GradedRingPresentation:
    """H*(CP^m) = Q[x]/(x^(m+1))."""
    if m < 1:
        raise PresentationError("projective space dimension must be positive")
    sig = RingSignature(("x",))
    return GradedRingPresentation(sig, (2,), (sig.gen("x") ** (m + 1),), field,
                                  {"kind": "cpn", "m": m})


def _as_base_class(base: GradedRingPresentation, root) -> Polynomial:
    if isinstance(root, Polynomial):
        if root.signature != base.signature:
            raise PresentationError("root lives in a different ring")
        return root
    if isinstance(root, str):
        return parse_polynomial(root, base.signature)
    if isinstance(root, (int,)) or root == 0:
        return base.signature.const(root)
    raise PresentationError(f"cannot interpret root {root!r}")


def split_bundle_ring(base: GradedRingPresentation, roots: Sequence, field: str | None = None,
                      bundle_var: str = "y", meta: dict | None = None) -> GradedRingPresentation:
    """Leray-Hirsch ring of P(L_0 + ... + L_r): base[y]/(prod_i (y + u_i)).

    ``roots`` are the first Chern classes u_i, homogeneous of degree 2 in the
    base generators (zero allowed).
    """
    if len(roots) < 2:
        raise PresentationError("a projective bundle needs at least two line bundles")
    us = [_as_base_class(base, r) for r in roots]
    for u in us:
        if u and not (u.is_homogeneous(base.degrees) and base.degree_of(next(iter(u.terms))) == 2):
            raise PresentationError(f"root {u} is not homogeneous of degree 2")
    if bundle_var in base.variables:
        raise PresentationError(f"bundle variable {bundle_var!r} clashes with base generators")
    # bundle generator ranks first, so the relation leads with y^(r+1) and the
    # standard monomials are base monomials times 1, y, ..., y^r
    sig = RingSignature((bundle_var,) + base.variables, base.signature.order)
    y = sig.gen(bundle_var)
    rel = sig.one()
    for u in us:
        rel = rel * (y + u.change_signature(sig))
    base_rels = tuple(r.change_signature(sig) for r in base.relations)
    if field is None:
        field = "Q" if base.field == "Q" and all(u.is_rational() for u in us) else "Qsqrtm3"
    info = {"kind": "bundle", "base": base.meta.get("kind"), "roots": [str(u) for u in us]}
    info.update(meta or {})
    return GradedRingPresentation(sig, (2,) + base.degrees, base_rels + (rel,), field, info,
                                  base.matrix_basis + (bundle_var,))


def hu_ring(u, field: str | None = None) -> GradedRingPresentation:
    """H*_u = H*(SU(3)/T)[y]/(y^2 + u*y) for a degree-2 class ``u``.

    ``u`` may be a polynomial over the flag ring, grammar text, or a pair of
    coefficients ``(a, b)`` meaning ``a*x1 + b*x2``.
    """
    base = flag_ring("Q")
    if isinstance(u, (tuple, list)):
        a, b = (as_scalar(c) for c in u)
        u = base.gen("x1").scale(a) + base.gen("x2").scale(b)
    u = _as_base_class(base, u)
    if u and not (u.is_homogeneous() and u.total_degree() == 1):
        raise PresentationError(f"u = {u} is not homogeneous of degree 2")
    if field is None:
        field = "Q" if u.is_rational() else "Qsqrtm3"
    coeffs = [u.coefficient((1, 0)), u.coefficient((0, 1))]
    ring = split_bundle_ring(base, [0, u], field,
                             meta={"kind": "hu", "u": [format_scalar(c) for c in coeffs],
                                   "convention": CONVENTION})
    # keep the relation in the y^2 + u*y shape
    return ring


def hu_coefficients(pres: GradedRingPresentation) -> Tuple[Scalar, Scalar] | None:
    """``(a, b)`` with u = a*x1 + b*x2 when ``pres`` is an H*_u ring, else None."""
    if pres.meta.get("kind") != "hu":
        return None
    sig = RingSignature(("x1", "x2"))
    a, b = (parse_polynomial(t, sig) for t in pres.meta["u"])
    return (a.coefficient((0, 0)), b.coefficient((0, 0)))


# degree-2 matrices and homomorphisms ------------------------------------------------

@dataclass(frozen=True)
class DegreeTwoMatrix:
    """Square matrix of a map on degree 2; column j is the image of generator j."""

    rows: Tuple[Tuple[Scalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_scalar(c) for c in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("degree-2 matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "DegreeTwoMatrix":
        n = len(columns)
        return cls(tuple(tuple(columns[j][i] for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, n: int) -> "DegreeTwoMatrix":
        return cls(tuple(tuple(linalg.identity(n)[i]) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(r[j] for r in self.rows)

    def det(self) -> Scalar:
        return linalg.det(self.rows)

    def is_invertible(self) -> bool:
        return self.det() != 0

    def inverse(self) -> "DegreeTwoMatrix":
        return DegreeTwoMatrix(tuple(tuple(r) for r in linalg.inverse(self.rows)))

    def __matmul__(self, other: "DegreeTwoMatrix") -> "DegreeTwoMatrix":
        return DegreeTwoMatrix(tuple(tuple(r) for r in linalg.matmul(self.rows, other.rows)))

    def scale(self, c) -> "DegreeTwoMatrix":
        c = as_scalar(c)
        return DegreeTwoMatrix(tuple(tuple(v * c for v in r) for r in self.rows))

    def apply(self, vec: Sequence) -> Tuple[Scalar, ...]:
        return tuple(sum((r[j] * as_scalar(vec[j]) for j in range(self.size)), QQ(0))
                     for r in self.rows)

    def is_rational(self) -> bool:
        return all(is_rational(c) for r in self.rows for c in r)

    def to_text(self) -> List[List[str]]:
        return [[format_scalar(c) for c in r] for r in self.rows]

    @classmethod
    def from_text(cls, rows: Sequence[Sequence[str]]) -> "DegreeTwoMatrix":
        sig = RingSignature(("_",))
        return cls(tuple(tuple(parse_polynomial(t, sig).coefficient((0,)) for t in r)
                         for r in rows))

    def __str__(self):
        return "(" + "; ".join(" ".join(format_scalar(c) for c in r) for r in self.rows) + ")"


def generator_images(src: GradedRingPresentation, dst: GradedRingPresentation,
                     m: DegreeTwoMatrix) -> List[Polynomial]:
    """Images in ``dst`` of the generators of ``src`` under ``m``, in signature order."""
    if src.signature.nvars != m.size or dst.signature.nvars != m.size:
        raise PresentationError(
            f"matrix of size {m.size} does not match {src.signature.nvars}/{dst.signature.nvars} "
            "generators")
    if not (src.is_degree_two_generated() and dst.is_degree_two_generated()):
        raise PresentationError("homomorphism check needs rings generated in degree 2")
    gens = [dst.gen(v) for v in dst.matrix_basis]
    by_name = {}
    for j, name in enumerate(src.matrix_basis):
        img = dst.signature.zero()
        for i, c in enumerate(m.column(j)):
            if c != 0:
                img = img + gens[i].scale(c)
        by_name[name] = img
    return [by_name[v] for v in src.variables]


@dataclass
class HomCheck:
    """Outcome of :func:`verify_graded_hom`; truthy iff the map is well defined."""

    ok: bool
    normal_forms: List[Polynomial]

    def __bool__(self):
        return self.ok


def apply_hom(src: GradedRingPresentation, dst: GradedRingPresentation, m: DegreeTwoMatrix,
              f: Polynomial) -> Polynomial:
    return dst.reduce(f.substitute(generator_images(src, dst, m), dst.signature))


def verify_graded_hom(src: GradedRingPresentation, dst: GradedRingPresentation,
                      m: DegreeTwoMatrix) -> HomCheck:
    """Does ``m`` on degree 2 extend to a ring map src -> dst?

    True iff every relation of ``src`` maps into the ideal of ``dst``; the
    normal forms of the mapped relations are kept as the witness.
    """
    images = generator_images(src, dst, m)
    nfs = [dst.reduce(r.substitute(images, dst.signature)) for r in src.relations]
    return HomCheck(all(nf.is_zero() for nf in nfs), nfs)


def is_isomorphism(src: GradedRingPresentation, dst: GradedRingPresentation,
                   m: DegreeTwoMatrix) -> bool:
    """Well-defined, invertible on degree 2, and equal graded dimensions.

    For rings generated in degree 2 these imply surjectivity in every degree,
    hence bijectivity.
    """
    return (m.is_invertible() and src.dimensions() == dst.dimensions()
            and verify_graded_hom(src, dst, m).ok)


def section_pullback(pres: GradedRingPresentation, cls_: Polynomial,
                     base: GradedRingPresentation | None = None,
                     bundle_var: str = "y") -> Polynomial:
    """s*: kill the bundle generator and reduce in the base ring."""
    if base is None:
        base = flag_ring(pres.field)
    if cls_.signature != pres.signature:
        raise PresentationError("class is not an element of this presentation")
    images = {v: (base.gen(v) if v != bundle_var else base.signature.zero())
              for v in pres.variables}
    return base.reduce(cls_.substitute(images, base.signature))


def leray_hirsch_dimensions(base: GradedRingPresentation, rank: int) -> Tuple[int, ...]:
    """sum_{j=0}^{r} dim_{d-2j}(base) for a P^r-bundle over ``base``."""
    bd = base.dimensions()
    out = [0] * (len(bd) + rank)
    for d in range(len(out)):
        out[d] = sum(bd[d - j] for j in range(rank + 1) if 0 <= d - j < len(bd))
    return tuple(out)
