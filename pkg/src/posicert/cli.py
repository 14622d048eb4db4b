"""Command-line front end.

Exit codes: 0 expected outcome, 1 property violated, 2 usage or validation
error.  All numbers cross the boundary as exact rationals.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager

from .poly import ExactPoly, parse_poly, parse_rat
from .positivity import is_log_convex, is_strongly_q_log_convex, is_tp_r
from .report import PASS, PropertyReport, jsonable
from .roots import interlaces, is_generalized_sturm_sequence, is_real_rooted
from .stability import generalized_stable, hurwitz_stable
from .transform import (
    MODES, SeedSequence, apply_transform, campaign_summary_csv, iterated_differences,
    run_campaign, stability_chain, verify_chain_stability, verify_preservation,
    verify_qlogconvex_runs,
)
from .triangle import (
    SpecError, generate, iter_csv_rows, lookup, matrix_triangle, row_gf_chain,
    rows_to_json, spec_from_json,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHECK_PROPERTIES = ("logconvex", "qlogconvex", "strong-qlogconvex", "tp", "realrooted",
                    "interlace", "sturmseq", "stable", "genstable")


class UsageError(Exception):
    pass


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _triangle_from_args(args, depth):
    if args.builtin and args.spec:
        raise UsageError("give either --builtin or --spec, not both")
    if args.builtin:
        spec = lookup(args.builtin, z=args.z, m=args.m)
    elif args.spec:
        with open(args.spec, encoding="utf-8") as fh:
            spec = spec_from_json(fh.read())
    else:
        raise UsageError("a triangle needs --builtin NAME or --spec FILE")
    return generate(spec, depth)


def _seed_from_args(args, n_max):
    name = args.seed or "monomials"
    if os.path.exists(name):
        with open(name, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise UsageError("seed file must hold a JSON list of polynomials")
        seed = SeedSequence.explicit([str(x) for x in data])
        if len(seed) < n_max + 1:
            raise UsageError(f"seed file has {len(seed)} members, need {n_max + 1}")
        return seed
    return SeedSequence.named(name, n_max)


def _polys(args):
    try:
        return [parse_poly(p) for p in (args.poly or [])]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit_report(rep: PropertyReport, out) -> int:
    with _output(out) as fh:
        fh.write(rep.to_json() + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- subcommands ---------------------------------------------------------------


def cmd_triangle(args) -> int:
    if args.rows < 0:
        raise UsageError("--rows must be nonnegative")
    tri = _triangle_from_args(args, args.rows)
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(rows_to_json(tri, args.rows) + "\n")
        else:
            for line in iter_csv_rows(tri, args.rows):
                fh.write(line + "\n")
    return EXIT_OK


def _one_poly(args):
    ps = _polys(args)
    if len(ps) != 1:
        raise UsageError(f"{args.property} needs exactly one --poly")
    return ps[0]


def _poly_sequence(args):
    ps = _polys(args)
    if ps:
        return ps, 0
    if args.builtin or args.spec:
        rows = args.rows if args.rows is not None else 10
        ch = row_gf_chain(_triangle_from_args(args, rows), rows)
        return list(ch.polys), ch.start
    if args.seed:
        n = args.nmax if args.nmax is not None else 10
        return list(_seed_from_args(args, n).values[: n + 1]), 0
    raise UsageError(f"{args.property} needs --poly values, a triangle, or --seed")


def cmd_check(args) -> int:
    prop = args.property
    if prop == "logconvex":
        if args.seq:
            try:
                seq = [parse_rat(x) for x in args.seq.split(",")]
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        else:
            polys, _ = _poly_sequence(args)
            if any(p.degree > 0 for p in polys):
                raise UsageError("logconvex needs a numeric sequence")
            seq = [p.coeff(0) for p in polys]
        rep = is_log_convex(seq)
    elif prop in ("qlogconvex", "strong-qlogconvex"):
        polys, start = _poly_sequence(args)
        rep = is_strongly_q_log_convex(polys, strong=(prop == "strong-qlogconvex"),
                                       start=start)
    elif prop == "tp":
        order = args.order or 2
        if args.matrix:
            try:
                rows = [[parse_rat(x) for x in r.split(",")] for r in args.matrix.split(";")]
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            if len({len(r) for r in rows}) != 1:
                raise UsageError("--matrix rows must have equal length")
            rep = is_tp_r(matrix_triangle(rows), order)
        else:
            rows = args.rows if args.rows is not None else 10
            rep = is_tp_r(_triangle_from_args(args, rows), order, rows)
    elif prop == "realrooted":
        f = _one_poly(args)
        if f.is_zero():
            raise UsageError("realrooted needs a nonzero polynomial")
        rep = is_real_rooted(f)
    elif prop == "interlace":
        ps = _polys(args)
        if len(ps) != 2:
            raise UsageError("interlace needs --poly G --poly F (G interlaces F)")
        rep = interlaces(ps[0], ps[1])
    elif prop == "sturmseq":
        polys, _ = _poly_sequence(args)
        rep = is_generalized_sturm_sequence(polys)
    else:
        f = _one_poly(args)
        if f.is_zero() or f.lc <= 0:
            raise UsageError(f"{prop} needs a polynomial with positive leading coefficient")
        rep = (hurwitz_stable if prop == "stable" else generalized_stable)(f)
    return _emit_report(rep, args.out)


def cmd_transform(args) -> int:
    n = args.nmax if args.nmax is not None else 10
    tri = _triangle_from_args(args, n)
    seed = _seed_from_args(args, n)
    ys = apply_transform(tri, seed, n)
    with _output(args.out) as fh:
        if args.format == "csv":
            for i, y in enumerate(ys):
                fh.write(f"{tri.start + i},{y.to_text()}\n")
        else:
            doc = {"triangle": tri.spec.builtin or tri.spec.family, "seed": seed.kind,
                   "start": tri.start, "y": [y.to_text() for y in ys]}
            fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    n = args.nmax if args.nmax is not None else 10
    if args.campaign:
        with open(args.campaign, encoding="utf-8") as fh:
            entries = json.load(fh)
        if not isinstance(entries, list):
            raise UsageError("campaign manifest must be a JSON list")
        results = run_campaign(entries)
        doc = {"schema": 1, "reports": [r.report.to_dict() for r in results]}
        with _output(args.out) as fh:
            fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        if args.summary:
            with open(args.summary, "w", encoding="utf-8") as fh:
                fh.write(campaign_summary_csv(results))
        return EXIT_OK if all(r.report.passed for r in results) else EXIT_FAIL
    if args.runs:
        return _emit_report(verify_qlogconvex_runs(n), args.out)
    if args.stability:
        chain = stability_chain(args.stability, n, fixed_q=args.fixed_q, m=args.m, z=args.z)
        label = args.stability if args.fixed_q is None else f"{args.stability}(q={args.fixed_q})"
        return _emit_report(verify_chain_stability(chain, n, label=label), args.out)
    tri = _triangle_from_args(args, n)
    seed = _seed_from_args(args, n)
    rep = verify_preservation(tri, seed, n, args.mode or "strong-q")
    return _emit_report(rep, args.out)


# -- repro -----------------------------------------------------------------------

# target -> outcome asserted by the source results (a counterexample must FAIL)
REPRO_EXPECTED = {
    "example51": "FAIL",
    "conjecture-jacobi": "PASS",
    "eulerian-stability": "PASS",
    "runs-qlc": "PASS",
}


def _repro_example51(n_max):
    tri = generate(lookup("motzkin"), 3)
    seed = SeedSequence.named("example51", 3)
    ys = apply_transform(tri, seed, 3)
    diff = ys[3] * ys[1] - ys[2] * ys[2]
    rep = is_strongly_q_log_convex(ys)
    lines = [f"y_{i} = {y}" for i, y in enumerate(ys)]
    lines.append(f"y3*y1 - y2^2 = {diff}")
    w = rep.witness
    if not rep.passed:
        lines.append(f"first failure: (n,m)=({w['n']},{w['m']}), power {w['power']}, "
                     f"coefficient {jsonable(w['value'])}")
    return rep, lines


def _repro_jacobi(n_max):
    lines, verdicts, detail = [], [], {}
    for kind in ("jacobi-stirling-2", "jacobi-stirling-1"):
        for z in (0, 1, 2):
            tri = generate(lookup(kind, z=z), n_max)
            for seed_name in ("motzkin-numbers", "catalan-numbers", "constant-one"):
                seed = SeedSequence.named(seed_name, n_max)
                rep = verify_preservation(tri, seed, n_max, "numeric-log-convex")
                ys = apply_transform(tri, seed, n_max)
                key = f"{kind}(z={z})/{seed_name}"
                lines.append(f"{key}: {rep.verdict}  y = "
                             + ", ".join(str(y.coeff(0)) for y in ys))
                verdicts.append(rep.passed)
                detail[key] = rep.verdict
    verdict = PASS if all(verdicts) else "FAIL"
    return PropertyReport("jacobi_stirling_log_convexity", verdict, detail,
                          {"n": [0, n_max], "z": [0, 2]}), lines


def _repro_eulerian(n_max):
    lines, detail, ok = [], {}, True
    for kind in ("eulerianA", "eulerianB"):
        chain = stability_chain(kind, n_max)
        for n, d in iterated_differences(chain, n_max).items():
            lines.append(f"{kind} n={n}: {d}")
        rep = verify_chain_stability(chain, n_max, label=kind)
        lines.append(f"{kind}: generalized stable {rep.verdict}")
        detail[kind] = rep.to_dict()
        ok = ok and rep.passed
    return PropertyReport("eulerian_iterated_generalized_stable", PASS if ok else "FAIL",
                          detail, {"n": [1, n_max - 1]}), lines


def _repro_runs(n_max):
    rep = verify_qlogconvex_runs(n_max)
    lines = [f"{k}: {v['verdict']}" for k, v in jsonable(rep.witness).items()]
    return rep, lines


_REPRO = {
    "example51": (_repro_example51, 3),
    "conjecture-jacobi": (_repro_jacobi, 12),
    "eulerian-stability": (_repro_eulerian, 10),
    "runs-qlc": (_repro_runs, 12),
}


def cmd_repro(args) -> int:
    if args.target not in _REPRO:
        raise UsageError(f"unknown repro target {args.target!r}; "
                         f"choose from {', '.join(sorted(_REPRO))}")
    fn, default_n = _REPRO[args.target]
    rep, lines = fn(args.nmax if args.nmax is not None else default_n)
    expected = REPRO_EXPECTED[args.target]
    match = rep.verdict == expected
    with _output(args.out) as fh:
        if args.format == "json":
            doc = {"target": args.target, "expected": expected, "match_paper": match,
                   "report": rep.to_dict(), "lines": lines}
            fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        else:
            fh.write(f"target: {args.target}\n")
            for line in lines:
                fh.write(line + "\n")
            fh.write(f"property: {rep.property} {rep.verdict}\n")
            fh.write(f"expected: {expected}\n")
            fh.write(f"match-paper: {'YES' if match else 'NO'}\n")
            fh.write(f"evidence: {rep.evidence}\n")
    return EXIT_OK if match else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


def _add_triangle_flags(p):
    p.add_argument("--builtin", metavar="NAME")
    p.add_argument("--spec", metavar="FILE")
    p.add_argument("--z", metavar="Q")
    p.add_argument("--m", metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posicert",
        description="Exact positivity certificates for combinatorial triangles.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("triangle", help="dump rows of a triangle")
    _add_triangle_flags(p)
    p.add_argument("--rows", type=int, default=10, metavar="N")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("check", help="run one property checker")
    p.add_argument("property", choices=CHECK_PROPERTIES)
    _add_triangle_flags(p)
    p.add_argument("--poly", action="append", metavar="STR")
    p.add_argument("--seq", metavar="A,B,...")
    p.add_argument("--matrix", metavar="ROW;ROW")
    p.add_argument("--seed", metavar="NAME|FILE")
    p.add_argument("--rows", type=int, metavar="N")
    p.add_argument("--nmax", type=int, metavar="N")
    p.add_argument("--order", type=int, metavar="R")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("transform", help="apply y_n = sum_k T[n][k] x_k")
    _add_triangle_flags(p)
    p.add_argument("--seed", metavar="NAME|FILE")
    p.add_argument("--nmax", type=int, metavar="N")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="preservation / stability campaigns")
    _add_triangle_flags(p)
    p.add_argument("--seed", metavar="NAME|FILE")
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--nmax", type=int, metavar="N")
    p.add_argument("--fixed-q", dest="fixed_q", metavar="Q")
    p.add_argument("--stability", metavar="KIND")
    p.add_argument("--runs", action="store_true")
    p.add_argument("--campaign", metavar="FILE")
    p.add_argument("--summary", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("repro", help="reproduce a published computation")
    p.add_argument("target")
    p.add_argument("--nmax", type=int, metavar="N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key in ("z", "m", "fixed_q"):
        val = getattr(args, key, None)
        if val is not None:
            try:
                setattr(args, key, parse_rat(val))
            except ValueError as exc:
                print(f"posicert: error: --{key.replace('_', '-')}: {exc}", file=sys.stderr)
                return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, SpecError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"posicert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
