"""Executable structure checks shared by the CLI ``verify`` command and the tests.

Each check returns a :class:`CheckResult`; randomized checks take a seed so
runs are reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List

from .cohomring import (
    DegreeTwoMatrix,
    flag_ring,
    hu_ring,
    leray_hirsch_dimensions,
    projective_space_ring,
    split_bundle_ring,
    verify_graded_hom,
)
from .exactpoly.scalar import OMEGA, QQ, conjugate, make_scalar
from .isoengine.endo import (
    DIAGONAL,
    RANK_ONE,
    X_MINUS,
    X_PLUS,
    annihilator_in_degree_two,
    canonical_form,
    canonicalize_endo,
    endo_necessary_conditions,
    product_coordinates,
    proportional,
)
from .isoengine.weyl import (
    WEYL_GROUP,
    IntegralLine,
    weyl_orbit_of_line,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": self.failures[:10]}


class _Recorder:
    def __init__(self, name: str):
        self.result = CheckResult(name, True)
        self._start = time.perf_counter()

    def expect(self, cond: bool, message: str):
        self.result.cases += 1
        if not cond:
            self.result.passed = False
            self.result.failures.append(message)

    def done(self) -> CheckResult:
        self.result.elapsed = time.perf_counter() - self._start
        return self.result


# Weyl group ------------------------------------------------------------------------

def check_weyl_table() -> CheckResult:
    rec = _Recorder("weyl")
    flag = flag_ring()
    for w in WEYL_GROUP:
        rec.expect(verify_graded_hom(flag, flag, w.matrix).ok and w.matrix.det() in (1, -1),
                   f"{w.name} is not a ring automorphism")
    matrices = {w.matrix: w for w in WEYL_GROUP}
    rec.expect(len(matrices) == 6, "the six matrices are not distinct")
    for a in WEYL_GROUP:
        for b in WEYL_GROUP:
            prod = a.matrix @ b.matrix
            rec.expect(prod in matrices, f"{a.name}*{b.name} leaves the group")
            rec.expect(prod == (a * b).matrix, f"{a.name}*{b.name} disagrees with permutations")
    rec.expect(any((a * b).perm != (b * a).perm for a in WEYL_GROUP for b in WEYL_GROUP),
               "group is abelian")
    rec.expect(weyl_orbit_of_line(IntegralLine(1, 0))
               == {IntegralLine(1, 0), IntegralLine(0, 1), IntegralLine(1, 1)}, "orbit of <x1>")
    rec.expect(weyl_orbit_of_line(IntegralLine(1, -1))
               == {IntegralLine(1, -1), IntegralLine(1, 2), IntegralLine(2, 1)},
               "orbit of <x1 - x2>")
    return rec.done()


# endomorphisms of the flag ring ----------------------------------------------------

def _random_nonzero(rng: random.Random, quadratic: bool):
    while True:
        a = QQ(rng.randint(-9, 9), rng.randint(1, 5))
        b = QQ(rng.randint(-9, 9), rng.randint(1, 5)) if quadratic else QQ(0)
        v = make_scalar(a, b)
        if v != 0:
            return v


def random_endomorphism(rng: random.Random):
    """(matrix, kind) for w1 * lam * form * w2 with random data."""
    kind = rng.choice((DIAGONAL, RANK_ONE))
    sigma = rng.choice((OMEGA, conjugate(OMEGA))) if kind == RANK_ONE else None
    lam = _random_nonzero(rng, rng.random() < 0.5)
    w1, w2 = rng.choice(WEYL_GROUP), rng.choice(WEYL_GROUP)
    return w1.matrix @ canonical_form(kind, sigma).scale(lam) @ w2.matrix, kind


def random_non_endomorphism(rng: random.Random) -> DegreeTwoMatrix:
    """Integer matrix violating the necessary conditions, so never an endomorphism."""
    while True:
        m = DegreeTwoMatrix(tuple(tuple(rng.randint(-6, 6) for _ in range(2))
                                  for _ in range(2)))
        if not endo_necessary_conditions(m):
            return m


def check_endo_conditions(n: int = 200, seed: int = 0, box: int = 2) -> CheckResult:
    rec = _Recorder("endo-necessary-conditions")
    rng = random.Random(seed)
    flag = flag_ring("Qsqrtm3")
    for _ in range(n):
        m, _kind = random_endomorphism(rng)
        rec.expect(verify_graded_hom(flag, flag, m).ok, f"{m} should be an endomorphism")
        rec.expect(endo_necessary_conditions(m), f"{m} fails the necessary conditions")
    for _ in range(n):
        m = random_non_endomorphism(rng)
        rec.expect(not verify_graded_hom(flag, flag, m).ok, f"{m} accepted as endomorphism")
    # exhaustive small box: every accepted matrix satisfies the conditions
    rat = flag_ring("Q")
    for entries in product(range(-box, box + 1), repeat=4):
        m = DegreeTwoMatrix((entries[:2], entries[2:]))
        if verify_graded_hom(rat, rat, m).ok:
            rec.expect(endo_necessary_conditions(m), f"{m} accepted but fails conditions")
    return rec.done()


def check_endo_canonical(n: int = 200, seed: int = 1) -> CheckResult:
    rec = _Recorder("endo-canonical-forms")
    rng = random.Random(seed)
    for _ in range(n):
        m, kind = random_endomorphism(rng)
        c = canonicalize_endo(m)
        back = c.left.matrix @ m @ c.right.matrix
        rec.expect(back == c.matrix(), f"{m}: canonical form does not reproduce")
        rec.expect(c.form == kind, f"{m}: form {c.form} but generated as {kind}")
    return rec.done()


# zero divisors ---------------------------------------------------------------------

def check_zero_divisors(n: int = 100, seed: int = 2) -> CheckResult:
    rec = _Recorder("zero-divisors")
    rng = random.Random(seed)
    rec.expect(all(c == 0 for c in product_coordinates(X_PLUS, X_MINUS)), "x+ * x- != 0")
    samples = []
    for i in range(n):
        if i % 4 == 0:
            lam = _random_nonzero(rng, True)
            base = X_PLUS if i % 8 == 0 else X_MINUS
            samples.append(tuple(lam * c for c in base))
        else:
            z = (_random_nonzero(rng, rng.random() < 0.5), _random_nonzero(rng, rng.random() < 0.5))
            samples.append(z)
    for z in samples:
        kernel = annihilator_in_degree_two(z)
        if proportional(z, X_PLUS):
            rec.expect(len(kernel) == 1 and proportional(kernel[0], X_MINUS),
                       f"kernel of {z} should be the x- line")
        elif proportional(z, X_MINUS):
            rec.expect(len(kernel) == 1 and proportional(kernel[0], X_PLUS),
                       f"kernel of {z} should be the x+ line")
        else:
            rec.expect(len(kernel) == 0, f"{z} has a non-trivial annihilator in degree 2")
    return rec.done()


# dimensions ------------------------------------------------------------------------

def check_dimensions(box: int = 10) -> CheckResult:
    rec = _Recorder("dimensions")
    flag = flag_ring()
    rec.expect(flag.dimensions() == (1, 2, 2, 1), f"flag ring dimensions {flag.dimensions()}")
    for text in ("x1^3", "x2^3", "x1^2*x2^2"):
        rec.expect(flag.reduce(flag.element(text)).is_zero(), f"{text} is not zero")
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            if (a, b) != (0, 0):
                dims = hu_ring((a, b)).dimensions()
                rec.expect(dims == (1, 3, 4, 3, 1), f"H*_u for u = ({a}, {b}) has {dims}")
    return rec.done()


def check_leray_hirsch() -> CheckResult:
    rec = _Recorder("leray-hirsch")
    cases = [(flag_ring(), [0, "x1"]), (flag_ring(), [0, "x1 + 2*x2", "x2"]),
             (projective_space_ring(2), [0, "3*x", "x"]),
             (projective_space_ring(3), [0, "x", "2*x"]),
             (projective_space_ring(1), ["x", "-x"])]
    for base, roots in cases:
        ring = split_bundle_ring(base, roots)
        expected = leray_hirsch_dimensions(base, len(roots) - 1)
        rec.expect(ring.dimensions() == expected,
                   f"bundle over {base.meta.get('kind')} with {roots}: {ring.dimensions()}")
        rec.expect(ring.total_dimension() == base.total_dimension() * len(roots),
                   "total dimension is not the free-module rank")
    return rec.done()


SUITES: Dict[str, Callable[[], CheckResult]] = {
    "weyl": check_weyl_table,
    "lemma37": check_endo_conditions,
    "lemma38": check_endo_canonical,
    "lemma44": check_zero_divisors,
    "dims": check_dimensions,
    "leray-hirsch": check_leray_hirsch,
}


def run_suite(name: str) -> List[CheckResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return [SUITES[name]()]
