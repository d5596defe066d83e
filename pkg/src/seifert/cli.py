"""Batch command-line interface.

Commands: cohomology | alexander | spectral | k2 | hf | check | count.
Input is a file path, "-" for stdin, inline forest text, or a shorthand
like "dynkin:A7", "star:6", "path:9".  Exit codes: 0 ok, 1 invalid input,
2 precondition violation, 3 invariant/cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, Tuple

from .alexander import (alexander_det, alexander_euler, alexander_matchings,
                        alexander_recursive, monodromy_char_poly)
from .checks import run_all
from .complexes import SeifertComplex, config_count
from .forest import (Forest, ForestError, dynkin, enumerate_matchings,
                     parse_forest, path, perfect_matching, star)
from .hf import LinkError, RecipeError, compare_report, gap_exponents, \
    hf_hat_poly, hf_minus_poly
from .poly import BiPolynomial, IntPolynomial
from .spectral import SpectralSequence, k2_cohomology, limit_dim

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_CHECK_FAILED = 3

SIZE_GUARDRAIL = 1 << 30


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def load_forest(spec: str) -> Forest:
    """Resolve a CLI input to a Forest."""
    try:
        if spec == "-":
            return parse_forest(sys.stdin.read())
        if ":" in spec and "\n" not in spec:
            kind, _, arg = spec.partition(":")
            kind = kind.lower()
            if kind == "dynkin":
                family, num = arg[:1], arg[1:]
                if not num.isdigit():
                    raise ForestError("bad dynkin shorthand %r" % spec)
                return dynkin(family, int(num))
            if kind == "star":
                return star(int(arg))
            if kind == "path":
                return path(int(arg))
            raise ForestError("unknown shorthand %r" % spec)
        if "\n" in spec or spec.startswith(("v ", "#")):
            return parse_forest(spec)
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_forest(fh.read())
    except ForestError as exc:
        raise CliError(str(exc), EXIT_INPUT)
    except (OSError, ValueError) as exc:
        raise CliError(str(exc), EXIT_INPUT)


def poly_json(p: IntPolynomial):
    return [[c, i] for i, c in enumerate(p.coeffs) if c]


def bipoly_json(p: BiPolynomial):
    return [[c, a, b] for (a, b), c in sorted(p.terms)]


def table_json(dims: Dict[Tuple[int, int], int]):
    return [{"q": q, "e": e, "dim": d}
            for (q, e), d in sorted(dims.items(), key=lambda kv: (kv[0][1], kv[0][0]))]


def forest_json(f: Forest):
    return {"v": f.vertex_count, "edges": [list(e) for e in f.sorted_edges]}


def format_table(dims: Dict[Tuple[int, int], int]) -> str:
    if not dims:
        return "  (empty)"
    lines = []
    for (q, e), d in sorted(dims.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        lines.append("  Q=%d E=%d  dim %d" % (q, e, d))
    return "\n".join(lines)


def guard_size(f: Forest, force: bool):
    if config_count(f) > SIZE_GUARDRAIL and not force:
        raise CliError(
            "configuration count exceeds 2^30; rerun with --force",
            EXIT_PRECONDITION)


def cmd_cohomology(f: Forest, args) -> dict:
    sc = SeifertComplex(f)
    dims = sc.cohomology_dims()
    p = sc.poincare_polynomial()
    if not args.json:
        print("Seifert cohomology dimensions:")
        print(format_table(dims))
        print("P(q,t) = %s" % p)
    return {"dims": table_json(dims), "poincare": bipoly_json(p)}


def cmd_alexander(f: Forest, args) -> dict:
    methods = {
        "det": alexander_det,
        "matchings": alexander_matchings,
        "euler": alexander_euler,
        "recursive": alexander_recursive,
        "monodromy": monodromy_char_poly,
    }
    if args.method == "all":
        values = {name: fn(f) for name, fn in methods.items()}
        delta = values["det"]
        ok = all(v == delta for v in values.values())
        if not args.json:
            for name, v in values.items():
                print("%-10s %s" % (name, v))
            print("cross-check: %s" % ("OK" if ok else "MISMATCH"))
        if not ok:
            raise CliError("alexander methods disagree", EXIT_CHECK_FAILED)
        return {"delta": poly_json(delta), "verdict": "OK"}
    delta = methods[args.method](f)
    if not args.json:
        print("Delta(t) = %s" % delta)
    return {"delta": poly_json(delta), "method": args.method}


def cmd_spectral(f: Forest, args) -> dict:
    ss = SpectralSequence(f)
    pages = {}
    for r in range(1, args.max_page + 1):
        pages[r] = ss.page(r)
    lim = limit_dim(f)
    if not args.json:
        for r, page in pages.items():
            print("E_%d (total dim %d):" % (r, page.total_dim))
            print(format_table(page.dims))
        print("limit dim = %d" % lim)
    return {
        "pages": [{"r": r, "dims": table_json(p.dims)}
                  for r, p in pages.items()],
        "limit_dim": lim,
    }


def cmd_k2(f: Forest, args) -> dict:
    gens = k2_cohomology(f)
    if not args.json:
        print("K2-cohomology: %d generators" % len(gens))
        for g in gens:
            print("  Q=%d E=%d" % g.bidegree)
    return {"generators": [{"q": g.bidegree[0], "e": g.bidegree[1]}
                           for g in gens]}


def cmd_hf(f: Forest, args) -> dict:
    try:
        delta = alexander_det(f)
        gaps = gap_exponents(delta)
        minus = hf_minus_poly(delta)
        hat = hf_hat_poly(delta)
        report = compare_report(f)
    except (LinkError, RecipeError) as exc:
        raise CliError(str(exc), EXIT_PRECONDITION)
    if not args.json:
        print("Delta(t)       = %s" % delta)
        print("gap exponents  = %s (stable from index %d)"
              % (list(gaps.alpha), gaps.stable_from))
        print("HF^- (u,t)     = %s + tail from u^%d t^%d"
              % (minus.poly.__str__(("u", "t")), *minus.tail_next))
        print("HF^hat (u,t)   = %s" % hat.__str__(("u", "t")))
        print("K2 bidegrees   = %s" % list(report.k2_exponents))
        print("verdict        = %s" % ("MATCH" if report.match else "DIFFER"))
    return {
        "delta": poly_json(delta),
        "gap_exponents": list(gaps.alpha),
        "stable_from": gaps.stable_from,
        "hf_minus": bipoly_json(minus.poly),
        "hf_minus_tail_next": list(minus.tail_next),
        "hf_hat": bipoly_json(hat),
        "k2_bidegrees": [list(p) for p in report.k2_exponents],
        "verdict": "MATCH" if report.match else "DIFFER",
    }


def cmd_check(f: Forest, args) -> dict:
    results = run_all(f)
    if not args.json:
        for name, ok in results.items():
            print("%-32s %s" % (name, "pass" if ok else "FAIL"))
    if not all(results.values()):
        raise CliError("invariant check failed", EXIT_CHECK_FAILED)
    return {"checks": {k: bool(v) for k, v in results.items()}}


def cmd_count(f: Forest, args) -> dict:
    n = config_count(f)
    matchings = len(enumerate_matchings(f))
    pm = perfect_matching(f)
    if not args.json:
        print("configurations  = %d" % n)
        print("matchings       = %d" % matchings)
        print("perfect matching: %s"
              % ("none" if pm is None else sorted(pm.edges)))
    return {"configurations": n, "matchings": matchings,
            "perfect_matching": None if pm is None
            else [list(e) for e in pm.edges]}


COMMANDS = {
    "cohomology": cmd_cohomology,
    "alexander": cmd_alexander,
    "spectral": cmd_spectral,
    "k2": cmd_k2,
    "hf": cmd_hf,
    "check": cmd_check,
    "count": cmd_count,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert",
        description="Bigraded tree cohomology, spectral sequences and "
                    "Alexander polynomials of forests.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input",
                        help="forest file, '-' for stdin, inline text, or "
                             "shorthand like dynkin:E8 / star:6 / path:9")
    parser.add_argument("--json", action="store_true",
                        help="emit a JSON report on stdout")
    parser.add_argument("--no-timing", action="store_true",
                        help="omit timing from the JSON report")
    parser.add_argument("--force", action="store_true",
                        help="skip the configuration-count guardrail")
    parser.add_argument("--threads", type=int, default=1,
                        help="reserved; computations run single-threaded")
    parser.add_argument("--method", default="all",
                        choices=["det", "matchings", "euler", "recursive",
                                 "monodromy", "all"],
                        help="alexander command: which computation to run")
    parser.add_argument("--max-page", type=int, default=2,
                        help="spectral command: highest page to print")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_page < 1:
        print("error: --max-page must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        f = load_forest(args.input)
        guard_size(f, args.force)
        start = time.monotonic()
        result = COMMANDS[args.command](f, args)
        elapsed_ms = (time.monotonic() - start) * 1000.0
        if args.json:
            report = {"forest": forest_json(f), "command": args.command,
                      "result": result}
            if not args.no_timing:
                report["timing_ms"] = round(elapsed_ms, 3)
            print(json.dumps(report, indent=2, sort_keys=True))
        return EXIT_OK
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
