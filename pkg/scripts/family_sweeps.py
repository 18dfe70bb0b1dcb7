"""Pairwise verdicts for the CP^2 prime family and the CP^3 {0, 1, k} family."""

import argparse
import json
from dataclasses import asdict, dataclass

from flagcohom.families import (
    cp2_prime_family,
    cp2_sweep,
    cp3_bott_ring,
    cp3_family,
    cp3_sweep,
)
from flagcohom.isoengine import GROEBNER, decide_iso_complex


@dataclass
class SweepConfig:
    prime_limit: int = 100
    k_max: int = 10
    groebner_k_max: int = 4  # cross-check cp3 pairs with the Groebner engine up to this k
    max_gb_seconds: float = 300.0


def run(cfg: SweepConfig) -> dict:
    primes = cp2_prime_family(cfg.prime_limit)
    cp2_rows = cp2_sweep([q for _, q in primes])
    ks = list(range(2, cfg.k_max + 1))
    family = cp3_family(ks)
    cp3_rows = cp3_sweep(family)
    cross = []
    small = [(k, q) for k, q in zip(ks, family) if k <= cfg.groebner_k_max]
    for i, (k, a) in enumerate(small):
        for l, b in small[i + 1:]:
            v = decide_iso_complex(cp3_bott_ring(a), cp3_bott_ring(b), GROEBNER,
                                   max_gb_seconds=cfg.max_gb_seconds)
            cross.append({"k": k, "k_prime": l, "tag": v.tag, "seconds": round(v.elapsed, 3)})
    tags = lambda rows: sorted({r["verdict"] for r in rows})
    print(f"cp2: {len(primes)} primes, {len(cp2_rows)} pairs, verdicts {tags(cp2_rows)}")
    print(f"cp3: {len(family)} members, {len(cp3_rows)} pairs, verdicts {tags(cp3_rows)}")
    print(f"cp3 Groebner cross-check: {[(c['k'], c['k_prime'], c['tag']) for c in cross]}")
    return {"config": asdict(cfg),
            "cp2": {"members": [{"p": p, "d_e": [q.d, q.e]} for p, q in primes], "pairs": cp2_rows},
            "cp3": {"pairs": cp3_rows, "groebner": cross}}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--prime-limit", type=int, default=100)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--groebner-k-max", type=int, default=4)
    p.add_argument("--out")
    a = p.parse_args()
    summary = run(SweepConfig(a.prime_limit, a.k_max, a.groebner_k_max))
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2)


if __name__ == "__main__":
    main()
