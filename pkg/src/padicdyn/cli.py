"""Command-line front end.

Exit codes: 0 success, 1 a gating check found a counterexample, 2 bad
usage or invalid parameters, 3 the tuple falls in the unclassified
configuration (classify and radii only; verify reports it as vacuous).
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import List, Optional

from . import map32
from .classifier import CaseTag, UnclassifiedCase, classify, critical_data
from .fixed import fixed_from_exact
from .map32 import InvalidParams, MapParams
from .padic import ExactPadic, parse_rational
from .radius import Radius
from .radius_dynamics import stylized_map, ultrametric_step
from .report import classification, csv_text, dumps, rows_csv, suite_document
from .verifier import SUITES, SphereSpec, SuiteConfig, VacuousSphere, run_suite, sample_sphere

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_UNCLASSIFIED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _params(args) -> MapParams:
    try:
        return MapParams.of(args.p, args.a, args.b, args.c, args.d)
    except (InvalidParams, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid parameters: {exc}") from exc


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exp(r: Radius) -> str:
    return "-inf" if r.is_zero else str(r.exp)


def _step_text(step) -> str:
    if step.is_deterministic:
        return str(step.r)
    lo = "0" if step.lower is None else str(step.lower)
    hi = "inf" if step.upper is None else str(step.upper)
    return f"[{lo}, {hi}]"


def cmd_classify(args) -> int:
    params = _params(args)
    doc = classification(params, seed=args.seed)
    if doc["case_tag"] == CaseTag.UNCLASSIFIED.value:
        doc["diagnostic"] = "δ = √α = √β: no radius map is defined for this configuration"
        _emit(args, dumps(doc))
        return EXIT_UNCLASSIFIED
    _emit(args, dumps(doc))
    return EXIT_OK


def cmd_orbit(args) -> int:
    params = _params(args)
    if args.x is None:
        raise UsageError("orbit needs --x")
    try:
        x = ExactPadic(params.p, parse_rational(args.x))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse --x: {exc}") from exc
    data = critical_data(params)
    if args.precision is None:
        rec = map32.orbit(params, x, args.n)
        points = [str(pt) for pt in rec.points]
    else:
        y = fixed_from_exact(x - params.x0, args.precision)
        rec = map32.offset_orbit_fixed(params, y, args.n, args.precision)
        points = [None if pt is None else str(pt) for pt in rec.points]
    rows = []
    for k, r in enumerate(rec.radii):
        pred = None if k == 0 else _step_text(ultrametric_step(rec.radii[k - 1], data))
        rows.append({"step": k, "point": points[k] if k < len(points) else None,
                     "radius": str(r), "predicted": pred})
    if args.format == "csv":
        _emit(args, rows_csv(("step", "point", "radius", "predicted"),
                             [[r["step"], r["point"], r["radius"], r["predicted"]] for r in rows]))
    else:
        _emit(args, dumps({"params": params.to_json(), "x": str(x), "n": args.n,
                           "mode": "exact" if args.precision is None else f"fixed({args.precision})",
                           "rows": rows, "termination": rec.termination()}))
    return EXIT_OK


def cmd_radii(args) -> int:
    params = _params(args)
    data = critical_data(params)
    tag = classify(data)
    if tag is CaseTag.UNCLASSIFIED:
        sys.stderr.write("unclassified: δ = √α = √β has no radius map\n")
        return EXIT_UNCLASSIFIED
    if args.r_exp is None:
        raise UsageError("radii needs --r-exp")
    r = Radius(parse_rational(args.r_exp))
    rows = []
    for k in range(args.n + 1):
        if k == 0:
            rows.append({"step": 0, "stylized": str(r), "ultrametric": str(r)})
            continue
        sty = stylized_map(tag, data, r)
        gen = ultrametric_step(r, data)
        rows.append({"step": k, "stylized": _step_text(sty), "ultrametric": _step_text(gen),
                     "stylized_note": getattr(sty, "note", "")})
        if not sty.is_deterministic:
            break
        r = sty.r
    if args.format == "csv":
        _emit(args, rows_csv(("step", "stylized", "ultrametric"),
                             [[x["step"], x["stylized"], x["ultrametric"]] for x in rows]))
    else:
        _emit(args, dumps({"params": params.to_json(), "case_tag": tag.value, "rows": rows}))
    return EXIT_OK


def cmd_verify(args) -> int:
    params = _params(args)
    cfg = SuiteConfig(seed=args.seed, samples=args.samples, n=args.n_steps,
                      k_threshold=args.k_threshold, budget=args.budget,
                      precision=args.precision or 48,
                      r_exp=None if args.r_exp is None else int(parse_rational(args.r_exp)))
    try:
        reports = run_suite(params, args.suite, cfg)
    except VacuousSphere as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "csv":
        _emit(args, csv_text(reports))
    else:
        _emit(args, dumps(suite_document(params, args.suite, args.seed, reports)))
    failures = [r for r in reports if r.failed]
    for rep in failures:
        sys.stderr.write(f"counterexample for {rep.claim}: {dumps(rep.counterexample)}")
    return EXIT_COUNTEREXAMPLE if failures else EXIT_OK


def cmd_sample(args) -> int:
    params = _params(args)
    if args.r_exp is None:
        raise UsageError("sample needs --r-exp")
    e = parse_rational(args.r_exp)
    try:
        spec = SphereSpec(params.x0, Radius(e), args.samples, args.seed)
    except VacuousSphere as exc:
        raise UsageError(str(exc)) from exc
    pts = sample_sphere(spec)
    if args.format == "csv":
        _emit(args, rows_csv(("index", "point", "radius"),
                             [[i, str(x), str((x - params.x0).norm())] for i, x in enumerate(pts)]))
    else:
        _emit(args, dumps({"params": params.to_json(), "radius": str(Radius(e)), "seed": args.seed,
                           "points": [str(x) for x in pts]}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="the prime")
    for name in "abcd":
        common.add_argument(f"--{name}", required=True, help="exact rational, 'num/den' or integer")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=20)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write here instead of standard output")
    common.add_argument("--precision", type=int, help="p-adic digits for fixed-precision orbits")
    common.add_argument("--r-exp", help="radius p^e given by its exponent e")

    parser = argparse.ArgumentParser(prog="padicdyn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common], help="norms, case tag and Siegel report")

    p_orbit = sub.add_parser("orbit", parents=[common], help="iterate f from a point")
    p_orbit.add_argument("--x", help="starting point")
    p_orbit.add_argument("--n", type=int, default=6)

    p_radii = sub.add_parser("radii", parents=[common], help="iterate the radius map only")
    p_radii.add_argument("--n", type=int, default=6)

    p_verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--n", dest="n_steps", type=int, help="orbit length per sample")
    p_verify.add_argument("--budget", type=int, default=64, help="step budget for long orbits")
    p_verify.add_argument("--k-threshold", type=int, default=10,
                          help="convergence means radius at most p^-K")

    sub.add_parser("sample", parents=[common], help="random points on a sphere around x0")
    return parser


_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _join_negative_values(argv: List[str]) -> List[str]:
    """Turn ``--x -9/8`` into ``--x=-9/8``; argparse would read -9/8 as a flag."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_RATIONAL.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


COMMANDS = {"classify": cmd_classify, "orbit": cmd_orbit, "radii": cmd_radii,
            "verify": cmd_verify, "sample": cmd_sample}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"padicdyn {args.command}: {exc}\n")
        return EXIT_USAGE
    except UnclassifiedCase as exc:
        sys.stderr.write(f"padicdyn {args.command}: unclassified: {exc}\n")
        return EXIT_UNCLASSIFIED


if __name__ == "__main__":
    sys.exit(main())
