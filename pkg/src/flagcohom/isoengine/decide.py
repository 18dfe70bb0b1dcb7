"""Graded isomorphism decisions over C.

Two routes are available.  The structured route uses the Weyl/scaling
transport and the candidate-line theorem for H*_u rings; it either proves
an isomorphism with a verified matrix, excludes one via the candidate set,
or gives up with Unknown.  The Groebner route is complete: the constraint
ideal is the unit ideal exactly when no isomorphism exists over C.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..cohomring import (
    DegreeTwoMatrix,
    GradedRingPresentation,
    PresentationError,
    flag_ring,
    hu_coefficients,
    is_isomorphism,
)
from ..exactpoly.groebner import GroebnerBasis, GroebnerTimeout, buchberger
from ..exactpoly.scalar import (
    OMEGA,
    QQ,
    SQRT_M3,
    Scalar,
    as_scalar,
    conjugate,
    scalar_sqrt,
)
from .candidates import candidate_line_set
from .constraints import ConstraintSystem, build_iso_constraints
from .weyl import WEYL_GROUP, IntegralLine, line_through

ISO = "Iso"
NONISO = "NonIso"
UNKNOWN = "Unknown"
TAGS = (ISO, NONISO, UNKNOWN)

CERT_UNIT_IDEAL = "groebner-unit-ideal"
CERT_INVARIANT = "invariant-mismatch"
CERT_CANDIDATES = "candidate-set-exclusion"

STRUCTURED = "structured"
GROEBNER = "groebner"
AUTO = "auto"
METHODS = (STRUCTURED, GROEBNER, AUTO)


class FieldMismatch(PresentationError):
    pass


@dataclass
class IsoVerdict:
    tag: str
    witness: Optional[DegreeTwoMatrix] = None
    certificate: Optional[str] = None
    method: str = ""
    detail: str = ""
    witness_pending: bool = False
    lhs: str = ""
    rhs: str = ""
    elapsed: float = 0.0

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown verdict tag {self.tag!r}")

    @property
    def is_iso(self) -> bool:
        return self.tag == ISO

    def to_dict(self) -> dict:
        out = {"lhs": self.lhs, "rhs": self.rhs, "tag": self.tag}
        if self.witness is not None:
            out["witness"] = self.witness.to_text()
        if self.witness_pending:
            out["witness_pending"] = True
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.detail:
            out["detail"] = self.detail
        out["method"] = self.method
        out["elapsed"] = round(self.elapsed, 6)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "IsoVerdict":
        w = data.get("witness")
        return cls(data["tag"], DegreeTwoMatrix.from_text(w) if w is not None else None,
                   data.get("certificate"), data.get("method", ""), data.get("detail", ""),
                   bool(data.get("witness_pending", False)), data.get("lhs", ""),
                   data.get("rhs", ""), float(data.get("elapsed", 0.0)))


def describe(pres: GradedRingPresentation) -> str:
    """Short human label for a presentation."""
    meta = pres.meta
    if "label" in meta:
        return str(meta["label"])
    if meta.get("kind") == "hu":
        a, b = hu_coefficients(pres)
        flag = flag_ring("Qsqrtm3")
        return f"H*_u[u = {flag.gen('x1').scale(a) + flag.gen('x2').scale(b)}]"
    return "[" + ", ".join(str(r) for r in pres.relations) + "]"


# structured route --------------------------------------------------------------------

def _u_vector(pres: GradedRingPresentation):
    coeffs = hu_coefficients(pres)
    return None if coeffs is None else tuple(as_scalar(c) for c in coeffs)


def _square_coordinates(vec) -> List[Scalar]:
    flag = flag_ring("Qsqrtm3")
    z = flag.gen("x1").scale(vec[0]) + flag.gen("x2").scale(vec[1])
    return flag.coordinates(z * z, 4)


def _ratio(num: Sequence[Scalar], den: Sequence[Scalar]) -> Optional[Scalar]:
    """r with num = r * den, or None."""
    r = None
    for a, b in zip(num, den):
        if b == 0:
            if a != 0:
                return None
            continue
        q = a / b
        if r is None:
            r = q
        elif q != r:
            return None
    return r


def hu_witness(src: GradedRingPresentation, dst: GradedRingPresentation
               ) -> Optional[DegreeTwoMatrix]:
    """Verified isomorphism H*_u' -> H*_u of the shape x -> w(x), y -> nu*y + c.

    The map is well defined iff 2c = nu*u - w(u') and nu^2 u^2 = w(u')^2 in the
    flag ring.  With c = 0 this is the Weyl and scaling transport; c != 0
    uses the zero divisors of degree 2.
    """
    src_u, dst_u = _u_vector(src), _u_vector(dst)
    if src_u is None or dst_u is None:
        return None
    if all(c == 0 for c in src_u) or all(c == 0 for c in dst_u):
        if all(c == 0 for c in src_u) and all(c == 0 for c in dst_u):
            return DegreeTwoMatrix.identity(3)
        return None
    target_sq = _square_coordinates(dst_u)
    found = []
    for w in WEYL_GROUP:
        wu = w.act(src_u)
        # pure transport first: nu * u = w(u')
        lam = _ratio(wu, dst_u)
        if lam is not None and lam != 0:
            found.insert(0, (w, lam))
            break
        r = _ratio(_square_coordinates(wu), target_sq)
        if r is not None and r != 0:
            nu = scalar_sqrt(r)
            if nu is not None:
                found.append((w, nu))
    for w, nu in found:
        wu = w.act(src_u)
        c = tuple((nu * dst_u[i] - wu[i]) / 2 for i in range(2))
        cols = [tuple(w.matrix.column(0)) + (QQ(0),), tuple(w.matrix.column(1)) + (QQ(0),),
                (c[0], c[1], nu)]
        m = DegreeTwoMatrix.from_columns(cols)
        if is_isomorphism(src, dst, m):
            return m
    return None


def _integral_line(vec) -> Optional[IntegralLine]:
    if vec is None or all(c == 0 for c in vec):
        return None
    return line_through(vec)


def structured_decision(src: GradedRingPresentation, dst: GradedRingPresentation) -> IsoVerdict:
    if src.same_presentation(dst):
        return IsoVerdict(ISO, DegreeTwoMatrix.identity(src.signature.nvars),
                          method=STRUCTURED, detail="identical presentations")
    m = hu_witness(src, dst)
    if m is not None:
        return IsoVerdict(ISO, m, method=STRUCTURED, detail="transport witness")
    src_line, dst_line = _integral_line(_u_vector(src)), _integral_line(_u_vector(dst))
    if src_line is not None and dst_line is not None:
        if dst_line not in candidate_line_set(src_line):
            return IsoVerdict(NONISO, certificate=CERT_CANDIDATES, method=STRUCTURED,
                              detail=f"{dst_line} not a candidate partner of {src_line}")
        if src_line not in candidate_line_set(dst_line):
            return IsoVerdict(NONISO, certificate=CERT_CANDIDATES, method=STRUCTURED,
                              detail=f"{src_line} not a candidate partner of {dst_line}")
        return IsoVerdict(UNKNOWN, method=STRUCTURED,
                          detail="candidate line without a structured witness")
    return IsoVerdict(UNKNOWN, method=STRUCTURED, detail="no structured criterion applies")


# Groebner route ----------------------------------------------------------------------

TRIAL_VALUES: tuple = (QQ(0), QQ(1), QQ(-1), QQ(2), QQ(-2), QQ(1, 2), QQ(-1, 2), QQ(3),
                       QQ(-3), OMEGA, conjugate(OMEGA), SQRT_M3, -SQRT_M3, QQ(4), QQ(-4))


def extract_witness(system: ConstraintSystem, basis: GroebnerBasis,
                    deadline: float | None = None) -> Optional[DegreeTwoMatrix]:
    """Specialize the unknowns one at a time while the ideal stays proper.

    Values forced by the basis are read off directly; otherwise a short list
    of small values in Q(sqrt(-3)) is tried.  Best effort: None on failure.
    """
    sig = system.signature
    gens = list(basis.generators)
    current = basis
    point = {}
    for var in system.matrix_variables():
        forced = current.reduce(sig.gen(var))
        if forced.is_constant():
            point[var] = forced.coefficient(sig.unit_monomial())
            continue
        for val in TRIAL_VALUES:
            trial = buchberger(gens + [sig.gen(var) - sig.const(val)], sig, deadline=deadline)
            if not trial.is_unit():
                current, gens, point[var] = trial, list(trial.generators), val
                break
        else:
            return None
    m = system.matrix_from_point(point)
    if is_isomorphism(system.src, system.dst, m):
        return m
    return None


def groebner_decision(src: GradedRingPresentation, dst: GradedRingPresentation, *,
                      max_gb_seconds: float | None = None,
                      extract: bool = True) -> IsoVerdict:
    deadline = None if max_gb_seconds is None else time.monotonic() + max_gb_seconds
    system = build_iso_constraints(src, dst)
    try:
        basis = buchberger(system.equations, system.signature, deadline=deadline)
    except GroebnerTimeout:
        return IsoVerdict(UNKNOWN, method=GROEBNER, detail="groebner budget exhausted")
    if basis.is_unit():
        return IsoVerdict(NONISO, certificate=CERT_UNIT_IDEAL, method=GROEBNER,
                          detail="constraint ideal contains 1")
    witness = None
    if extract:
        if src.same_presentation(dst):
            witness = DegreeTwoMatrix.identity(src.signature.nvars)
        else:
            witness = hu_witness(src, dst)
        if witness is None:
            try:
                witness = extract_witness(system, basis, deadline)
            except GroebnerTimeout:
                witness = None
    return IsoVerdict(ISO, witness, method=GROEBNER, witness_pending=witness is None,
                      detail="constraint ideal is proper")


def decide_iso_complex(src: GradedRingPresentation, dst: GradedRingPresentation,
                       method: str = AUTO, *, max_gb_seconds: float | None = None
                       ) -> IsoVerdict:
    """Iso / NonIso / Unknown for the graded rings ``src`` and ``dst`` over C."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if src.field != dst.field:
        raise FieldMismatch(f"field tags differ: {src.field} vs {dst.field}")
    start = time.perf_counter()
    if src.dimensions() != dst.dimensions():
        verdict = IsoVerdict(NONISO, certificate=CERT_INVARIANT, method=method,
                             detail=f"graded dimensions {src.dimensions()} vs "
                                    f"{dst.dimensions()}")
    elif method == GROEBNER:
        verdict = groebner_decision(src, dst, max_gb_seconds=max_gb_seconds)
    else:
        verdict = structured_decision(src, dst)
        if verdict.tag == UNKNOWN and method == AUTO:
            verdict = groebner_decision(src, dst, max_gb_seconds=max_gb_seconds)
    verdict.lhs, verdict.rhs = describe(src), describe(dst)
    verdict.elapsed = time.perf_counter() - start
    return verdict

