"""Independent reference computations used by the tests."""

import random
from itertools import combinations_with_replacement

from flagcohom.exactpoly import QQ, Polynomial, RingSignature, make_scalar
from flagcohom.exactpoly import linalg


def monomials_of_degree(nvars, d):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return sorted(set(out))


def random_homogeneous(rng, sig, degree, nterms=3, coeff=5, quadratic=False):
    mons = monomials_of_degree(sig.nvars, degree)
    terms = {}
    for m in rng.sample(mons, min(nterms, len(mons))):
        a = QQ(rng.randint(-coeff, coeff), rng.randint(1, 3))
        b = QQ(rng.randint(-coeff, coeff)) if quadratic else QQ(0)
        terms[m] = make_scalar(a, b)
    return Polynomial(sig, terms)


def random_polynomial(rng, sig, max_degree=3, nterms=4, coeff=7, quadratic=False):
    terms = {}
    for _ in range(nterms):
        m = tuple(rng.randint(0, max_degree) for _ in range(sig.nvars))
        a = QQ(rng.randint(-coeff, coeff), rng.randint(1, 4))
        b = QQ(rng.randint(-coeff, coeff), rng.randint(1, 4)) if quadratic else QQ(0)
        terms[m] = make_scalar(a, b)
    return Polynomial(sig, terms)


def macaulay_rows(gens, degree):
    """Coefficient vectors of m * f with deg(m * f) == degree (homogeneous gens)."""
    sig = gens[0].signature
    cols = monomials_of_degree(sig.nvars, degree)
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for f in gens:
        df = f.total_degree()
        if df > degree:
            continue
        for m in monomials_of_degree(sig.nvars, degree - df):
            row = [QQ(0)] * len(cols)
            for mono, c in f.mul_term(m, QQ(1)).terms.items():
                row[index[mono]] = c
            rows.append(row)
    return rows, cols


def in_homogeneous_ideal(g, gens):
    """Degreewise membership of a homogeneous g by linear algebra."""
    if g.is_zero():
        return True
    d = g.total_degree()
    rows, cols = macaulay_rows(gens, d)
    if not rows:
        return False
    target = [g.coefficient(m) for m in cols]
    return linalg.rank(rows) == linalg.rank(rows + [target])


def degree_span_is_full(gens, degree):
    rows, cols = macaulay_rows(gens, degree)
    return bool(rows) and linalg.rank(rows) == len(cols)


def affine_unit_by_span(gens, bound):
    """1 in the ideal, detected in the truncated span of m * f, deg(m * f) <= bound."""
    sig = gens[0].signature
    cols = [m for d in range(bound + 1) for m in monomials_of_degree(sig.nvars, d)]
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for f in gens:
        df = f.total_degree()
        for d in range(bound - df + 1):
            for m in monomials_of_degree(sig.nvars, d):
                row = [QQ(0)] * len(cols)
                for mono, c in f.mul_term(m, QQ(1)).terms.items():
                    row[index[mono]] = c
                rows.append(row)
    one = [QQ(0)] * len(cols)
    one[index[(0,) * sig.nvars]] = QQ(1)
    return linalg.rank(rows) == linalg.rank(rows + [one])


def seeded(seed):
    return random.Random(seed)
