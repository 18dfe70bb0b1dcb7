"""Command-line front end: ``flagcohom {ring,iso,classify,families,verify}``.

Reports are dictionaries rendered either as JSON or as YAML text; both carry
the same content.  Wall-clock timings live only under the ``timing`` key so
that the rest of a report is reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List, Optional, Sequence

import yaml

from . import __version__
from .checks import SUITES, run_suite
from .cohomring import (
    CONVENTION,
    FIELDS,
    GradedRingPresentation,
    PresentationError,
    flag_ring,
    hu_ring,
    projective_space_ring,
)
from .exactpoly.printer import format_monomial
from .exactpoly.parser import PolynomialSyntaxError
from .families import (
    CP2_RATIONAL,
    CP3_COMPLEX,
    Cp2BottParams,
    Cp3BottParams,
    FamilyParameterError,
    MklParams,
    cp2_bott_ring,
    cp2_prime_family,
    cp2_rational_invariant,
    cp2_sweep,
    cp3_bott_ring,
    cp3_family,
    cp3_sweep,
    family_iso_test,
    mkl_ring,
    mkl_u_class,
)
from .isoengine import METHODS, IntegralLine, classify_lines, coprime_grid, decide_iso_complex
from .isoengine.decide import AUTO, GROEBNER, UNKNOWN

EXIT_OK, EXIT_ENGINE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# parameter parsing --------------------------------------------------------------------

def _ints(text: str, count: Optional[int] = None) -> List[int]:
    try:
        vals = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return vals


def _family_params(family: str, text: str):
    try:
        if family == "mkl":
            return MklParams(*_ints(text, 2))
        if family == "cp2":
            return Cp2BottParams(*_ints(text, 2))
        if family == "cp3":
            return Cp3BottParams(*_ints(text, 3))
    except FamilyParameterError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}")


def _family_ring(family: str, params, field: str = "Q") -> GradedRingPresentation:
    if family == "mkl":
        return mkl_ring(params, field)
    if family == "cp2":
        return cp2_bott_ring(params, field)
    return cp3_bott_ring(params, field)


def _raw_ring(text: str) -> GradedRingPresentation:
    """A presentation given as JSON text or as a path to a JSON file."""
    source = text
    if not text.lstrip().startswith("{"):
        try:
            with open(text, encoding="utf-8") as fh:
                source = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read presentation {text!r}: {exc}") from None
    try:
        return GradedRingPresentation.from_json(source)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid presentation: {exc}") from None


# subcommands -----------------------------------------------------------------------

def _ring_payload(ring: GradedRingPresentation, betti: bool, basis: Optional[int]) -> dict:
    out = ring.to_dict()
    out["dimensions"] = list(ring.dimensions())
    out["total_dimension"] = ring.total_dimension()
    if betti:
        # dimensions are indexed by half the cohomological degree; odd Betti numbers vanish
        out["betti"] = {f"b{2 * i}": n for i, n in enumerate(ring.dimensions())}
    if basis is not None:
        out["basis"] = {"degree": basis,
                        "monomials": [format_monomial(m, ring.variables)
                                      for m in ring.graded_basis(basis)]}
    return out


def cmd_ring(args) -> dict:
    kind = args.kind
    if kind == "flag":
        ring = flag_ring(args.field)
    elif kind == "cpn":
        if args.m is None or args.m < 1:
            raise UsageError("ring cpn needs --m N with N >= 1")
        ring = projective_space_ring(args.m, args.field)
    elif kind == "hu":
        if args.u is None:
            raise UsageError("ring hu needs --u \"a,b\"")
        ring = hu_ring(tuple(_ints(args.u, 2)), args.field)
    else:
        if args.params is None:
            raise UsageError(f"ring {kind} needs --params")
        params = _family_params(kind, args.params)
        ring = _family_ring(kind, params, args.field)
    return {"ring": _ring_payload(ring, args.betti, args.basis)}


def cmd_iso(args) -> dict:
    family = args.family
    if family == "raw":
        lhs, rhs = _raw_ring(args.lhs), _raw_ring(args.rhs)
        verdict = decide_iso_complex(lhs, rhs, args.method, max_gb_seconds=args.max_gb_seconds)
        return {"verdict": verdict.to_dict()}
    lp, rp = _family_params(family, args.lhs), _family_params(family, args.rhs)
    out: Dict[str, object] = {}
    if family == "mkl":
        out["lines"] = [str(mkl_u_class(lp)[1]), str(mkl_u_class(rp)[1])]
        verdict = decide_iso_complex(mkl_ring(lp), mkl_ring(rp), args.method,
                                     max_gb_seconds=args.max_gb_seconds)
    else:
        fam = CP2_RATIONAL if family == "cp2" else CP3_COMPLEX
        try:
            verdict = family_iso_test(fam, lp, rp)
        except FamilyParameterError as exc:
            raise UsageError(str(exc)) from None
        if family == "cp2":
            out["field"] = "Q"
        if args.method == GROEBNER or (verdict.tag == UNKNOWN and args.method == AUTO):
            complex_verdict = decide_iso_complex(_family_ring(family, lp),
                                                 _family_ring(family, rp), GROEBNER,
                                                 max_gb_seconds=args.max_gb_seconds)
            if family == "cp3":
                verdict = complex_verdict
            else:
                out["complex_verdict"] = complex_verdict.to_dict()
    out["verdict"] = verdict.to_dict()
    return out


def _classify_lines_for(args) -> List[IntegralLine]:
    if args.max < 1:
        raise UsageError("--max must be at least 1")
    if args.coprime:
        return coprime_grid(args.max)
    seen = []
    for l in range(args.max + 1):
        for k in range(l + 1):
            if (k, l) != (0, 0):
                line = IntegralLine(k, l)
                if line not in seen:
                    seen.append(line)
    return seen


def cmd_classify(args) -> dict:
    if args.family != "mkl":
        raise UsageError("classify supports --family mkl")
    lines = _classify_lines_for(args)
    result = classify_lines(lines, args.method, workers=args.workers,
                            max_gb_seconds=args.max_gb_seconds, exhaustive=args.exhaustive)
    payload = result.to_dict()
    payload["lines"] = [str(x) for x in lines]
    return {"classification": payload}


def cmd_families(args) -> dict:
    if args.which == "cp2":
        rows = [{"p": p, "d_e": [q.d, q.e], "invariant": cp2_rational_invariant(q)}
                for p, q in cp2_prime_family(args.prime_limit)]
        sweep = cp2_sweep([q for _, q in cp2_prime_family(args.prime_limit)])
        return {"family": CP2_RATIONAL, "members": rows, "pairs": sweep}
    ks = range(2, args.k_max + 1)
    members = [{"k": k, "params": list(q.values)} for k, q in zip(ks, cp3_family(ks))]
    return {"family": CP3_COMPLEX, "members": members, "pairs": cp3_sweep(cp3_family(ks))}


def cmd_verify(args) -> dict:
    results = run_suite(args.suite)
    return {"checks": [r.to_dict() for r in results],
            "all_passed": all(r.passed for r in results)}


# reports ---------------------------------------------------------------------------

def _strip_timing(obj, timing: Dict[str, float], path: str = "result"):
    """Move every ``elapsed`` value out of the payload into ``timing``."""
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            if k == "elapsed":
                timing[path] = v
            else:
                out[k] = _strip_timing(v, timing, f"{path}.{k}")
        return out
    if isinstance(obj, list):
        return [_strip_timing(v, timing, f"{path}[{i}]") for i, v in enumerate(obj)]
    return obj


def _warnings(result: dict) -> List[str]:
    found: List[str] = []

    def walk(obj, path):
        if isinstance(obj, dict):
            if obj.get("tag") == UNKNOWN:
                found.append(f"{path}: Unknown verdict")
            if obj.get("witness_pending"):
                found.append(f"{path}: Iso without an extracted witness")
            for k, v in obj.items():
                walk(v, f"{path}.{k}")
        elif isinstance(obj, list):
            for i, v in enumerate(obj):
                walk(v, f"{path}[{i}]")

    walk(result, "result")
    for pair in result.get("classification", {}).get("unknown_pairs", []):
        found.append(f"unresolved pair {pair[0]} ~ {pair[1]}")
    return found


def build_report(command: str, request: dict, result: dict, seconds: float) -> dict:
    timing: Dict[str, float] = {}
    clean = _strip_timing(result, timing)
    timing["total"] = round(seconds, 6)
    return {
        "engine": {"name": "flagcohom", "version": __version__, "convention": CONVENTION},
        "request": {"command": command, **request},
        "result": clean,
        "warnings": _warnings(clean),
        "timing": timing,
    }


def emit_report(report: dict, mode: str = "text") -> str:
    if mode == "json":
        return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False)
    header = f"# flagcohom {report['engine']['version']} ({report['engine']['convention']})\n"
    return header + yaml.safe_dump(report, sort_keys=False, allow_unicode=True, width=100)


def parse_report(text: str) -> dict:
    """Inverse of :func:`emit_report` for either mode."""
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    return yaml.safe_load(text)


def comparable(report: dict) -> dict:
    """Report without the timing field, for determinism comparisons."""
    return {k: v for k, v in report.items() if k != "timing"}


# argument parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flagcohom",
                                     description="Cohomology rings of SU(3)/T bundles and "
                                                 "their isomorphism classes.")
    parser.add_argument("--version", action="version", version=f"flagcohom {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--method", choices=METHODS, default=AUTO)
    solver.add_argument("--max-gb-seconds", type=float, default=None, dest="max_gb_seconds",
                        help="per-pair Groebner budget; exceeding it yields Unknown")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", parents=[common], help="build and print a presentation")
    p.add_argument("kind", choices=("flag", "cpn", "hu", "mkl", "cp2", "cp3"))
    p.add_argument("--m", type=int)
    p.add_argument("--u")
    p.add_argument("--params")
    p.add_argument("--field", choices=FIELDS, default="Q")
    p.add_argument("--betti", action="store_true")
    p.add_argument("--basis", type=int, metavar="D")
    p.set_defaults(handler=cmd_ring)

    p = sub.add_parser("iso", parents=[common, solver], help="decide graded isomorphism")
    p.add_argument("--family", choices=("mkl", "cp2", "cp3", "raw"), required=True)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("classify", parents=[common, solver], help="partition integral lines")
    p.add_argument("--family", choices=("mkl",), default="mkl")
    p.add_argument("--coprime", action="store_true")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true",
                   help="run the Groebner test on every pair of orbit representatives")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("families", parents=[common], help="family invariants and sweeps")
    p.add_argument("which", choices=("cp2", "cp3"))
    p.add_argument("--prime-limit", type=int, default=40, dest="prime_limit")
    p.add_argument("--k-max", type=int, default=10, dest="k_max")
    p.set_defaults(handler=cmd_families)

    p = sub.add_parser("verify", parents=[common], help="run structure checks")
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    p.set_defaults(handler=cmd_verify)
    return parser


def _request_echo(args) -> dict:
    skip = {"handler", "command", "json"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run_command(argv: Sequence[str]) -> tuple:
    """(exit code, report or None, error message or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), None, None
    start = time.perf_counter()
    try:
        result = args.handler(args)
    except UsageError as exc:
        return EXIT_USAGE, None, f"usage error: {exc}"
    except (PresentationError, PolynomialSyntaxError, FamilyParameterError, ValueError,
            RuntimeError) as exc:
        return EXIT_ENGINE, None, f"error: {exc}"
    report = build_report(args.command, _request_echo(args), result,
                          time.perf_counter() - start)
    if args.command == "verify" and not result["all_passed"]:
        return EXIT_ENGINE, report, "some checks failed"
    return EXIT_OK, report, None


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, report, error = run_command(argv)
    if report is not None:
        mode = "json" if "--json" in argv else "text"
        print(emit_report(report, mode))
    if error:
        print(error, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
