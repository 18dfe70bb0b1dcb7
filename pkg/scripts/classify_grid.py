"""Classify the coprime grid of integral lines and report class counts per grid size."""

import argparse
import json
from dataclasses import asdict, dataclass
from typing import Optional

from flagcohom.isoengine import GROEBNER, METHODS, classify_lines, coprime_grid


@dataclass
class GridConfig:
    sizes: tuple = (4, 5, 6, 7, 8)
    method: str = GROEBNER
    workers: int = 1
    max_gb_seconds: Optional[float] = 60.0
    include_axes: bool = False
    exhaustive: bool = False


def run(cfg: GridConfig) -> dict:
    rows = []
    for n in cfg.sizes:
        lines = coprime_grid(n, include_axes=cfg.include_axes)
        result = classify_lines(lines, cfg.method, workers=cfg.workers,
                                max_gb_seconds=cfg.max_gb_seconds, exhaustive=cfg.exhaustive)
        rows.append({"max": n, "lines": len(lines), "class_count": result.class_count,
                     "groebner_runs": result.groebner_runs,
                     "unknown_pairs": len(result.unknown_pairs),
                     "classes": [[str(x) for x in c] for c in result.classes],
                     "seconds": round(result.elapsed, 3)})
        print(f"max {n}: {len(lines)} lines, {result.class_count} classes, "
              f"{result.groebner_runs} Groebner runs, {result.elapsed:.1f}s")
    return {"config": asdict(cfg), "rows": rows}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sizes", type=int, nargs="+", default=list(GridConfig.sizes))
    p.add_argument("--method", choices=METHODS, default=GROEBNER)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-gb-seconds", type=float, default=60.0)
    p.add_argument("--include-axes", action="store_true")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--out", help="write the JSON summary here")
    a = p.parse_args()
    cfg = GridConfig(tuple(a.sizes), a.method, a.workers, a.max_gb_seconds, a.include_axes,
                     a.exhaustive)
    summary = run(cfg)
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            json.dump(summary, fh, indent=2)


if __name__ == "__main__":
    main()
