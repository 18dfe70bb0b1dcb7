"""Partition integral lines by isomorphism type of H*_u."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

from ..cohomring import hu_ring, is_isomorphism
from .candidates import candidate_line_set
from .decide import (
    AUTO,
    CERT_CANDIDATES,
    GROEBNER,
    ISO,
    METHODS,
    NONISO,
    STRUCTURED,
    UNKNOWN,
    IsoVerdict,
    decide_iso_complex,
    describe,
    hu_witness,
)
from .weyl import IntegralLine, orbit_representative

Pair = Tuple[IntegralLine, IntegralLine]


@dataclass
class Classification:
    classes: List[List[IntegralLine]]
    verdicts: Dict[Pair, IsoVerdict]
    orbit_representatives: Dict[IntegralLine, IntegralLine]
    unknown_pairs: List[Pair] = field(default_factory=list)
    inconsistent_pairs: List[Pair] = field(default_factory=list)
    groebner_runs: int = 0
    elapsed: float = 0.0

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, line: IntegralLine) -> int:
        for i, c in enumerate(self.classes):
            if line in c:
                return i
        raise KeyError(line)

    def same_class(self, a: IntegralLine, b: IntegralLine) -> bool:
        return self.class_of(a) == self.class_of(b)

    @property
    def consistent(self) -> bool:
        return not self.inconsistent_pairs

    def to_dict(self) -> dict:
        return {
            "classes": [[str(x) for x in c] for c in self.classes],
            "class_count": self.class_count,
            "pairs": [{"lhs": str(a), "rhs": str(b), **_pair_payload(v)}
                      for (a, b), v in sorted(self.verdicts.items())],
            "unknown_pairs": [[str(a), str(b)] for a, b in self.unknown_pairs],
            "inconsistent_pairs": [[str(a), str(b)] for a, b in self.inconsistent_pairs],
            "groebner_runs": self.groebner_runs,
        }


def _pair_payload(v: IsoVerdict) -> dict:
    out = {"tag": v.tag, "method": v.method}
    if v.certificate:
        out["certificate"] = v.certificate
    if v.witness is not None:
        out["witness"] = v.witness.to_text()
    if v.witness_pending:
        out["witness_pending"] = True
    return out


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller representative wins, so the result is order independent
            lo, hi = sorted((ra, rb))
            self.parent[hi] = lo


def _decide_pair(args) -> IsoVerdict:
    a, b, method, max_gb_seconds = args
    return decide_iso_complex(hu_ring(a.vector), hu_ring(b.vector), method,
                              max_gb_seconds=max_gb_seconds)


def _orbit_verdict(line: IntegralLine, rep: IntegralLine) -> IsoVerdict:
    src, dst = hu_ring(line.vector), hu_ring(rep.vector)
    m = hu_witness(src, dst)
    if m is None or not is_isomorphism(src, dst, m):
        raise AssertionError(f"Weyl transport failed for {line} -> {rep}")
    return IsoVerdict(ISO, m, method=STRUCTURED, detail="Weyl orbit transport",
                      lhs=describe(src), rhs=describe(dst))


def classify_lines(lines: Iterable[IntegralLine], method: str = AUTO, *, workers: int = 1,
                   max_gb_seconds: Optional[float] = None, exhaustive: bool = False,
                   cache: Optional[Dict] = None) -> Classification:
    """Equivalence classes of ``lines`` under graded isomorphism of H*_u.

    Lines in one Weyl orbit are merged with transport witnesses.  Pairs of
    orbit representatives are then decided in canonical order; outside
    ``exhaustive`` mode pairs excluded by the candidate set skip the Groebner
    run.  Unknown verdicts are reported and never merged.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    start = time.perf_counter()
    lines = [x if isinstance(x, IntegralLine) else IntegralLine(*x) for x in lines]
    if len(set(lines)) != len(lines):
        raise ValueError("lines must be pairwise distinct")
    cache = {} if cache is None else cache
    reps = {x: orbit_representative(x) for x in lines}
    verdicts: Dict[Pair, IsoVerdict] = {}
    for x in sorted(lines):
        if x != reps[x]:
            verdicts[(x, reps[x])] = _orbit_verdict(x, reps[x])
    orbit_reps = sorted(set(reps.values()))

    todo: List[Pair] = []
    for i, a in enumerate(orbit_reps):
        for b in orbit_reps[i + 1:]:
            key = (a, b, method, exhaustive)
            if key in cache:
                verdicts[(a, b)] = cache[key]
                continue
            if not exhaustive and (b not in candidate_line_set(a)
                                   or a not in candidate_line_set(b)):
                v = IsoVerdict(NONISO, certificate=CERT_CANDIDATES, method=STRUCTURED,
                               detail="outside the candidate set")
                verdicts[(a, b)] = cache[key] = v
                continue
            todo.append((a, b))

    jobs = [(a, b, method, max_gb_seconds) for a, b in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_decide_pair, jobs))
    else:
        results = [_decide_pair(j) for j in jobs]
    runs = 0
    for (a, b), v in zip(todo, results):
        verdicts[(a, b)] = cache[(a, b, method, exhaustive)] = v
        runs += v.method == GROEBNER

    uf = _UnionFind(sorted(set(lines) | set(orbit_reps)))
    unknown: List[Pair] = []
    for (a, b) in sorted(verdicts):
        v = verdicts[(a, b)]
        if v.tag == ISO:
            uf.union(a, b)
        elif v.tag == UNKNOWN:
            unknown.append((a, b))
    inconsistent = [(a, b) for (a, b), v in sorted(verdicts.items())
                    if v.tag == NONISO and uf.find(a) == uf.find(b)]
    groups: Dict[IntegralLine, List[IntegralLine]] = {}
    for x in sorted(lines):
        groups.setdefault(uf.find(x), []).append(x)
    classes = sorted(groups.values(), key=lambda c: c[0])
    return Classification(classes, verdicts, reps, unknown, inconsistent, runs,
                          time.perf_counter() - start)


def coprime_grid(n: int, *, include_axes: bool = False) -> List[IntegralLine]:
    """<k x1 + l x2> with 1 <= k <= l <= n and gcd(k, l) = 1 (plus <x2> if asked)."""
    out = [IntegralLine(k, l) for l in range(1, n + 1) for k in range(1, l + 1)
           if gcd(k, l) == 1]
    if include_axes:
        out.insert(0, IntegralLine(0, 1))
    return out
