"""Linear transforms ``y_n = sum_k T[n][k] x_k`` and verification campaigns.

Everything here checks finite instances.  Reports say so in their
``evidence`` field and never claim a statement for all n.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import ONE, ExactPoly, as_rat, parse_poly
from .positivity import is_log_convex, is_strongly_q_log_convex, is_tp_r
from .report import INPUT_FAIL, PropertyReport
from .stability import generalized_stable, hurwitz_stable
from .triangle import (
    AFFINE, GENERAL, QUADRATIC, RIGHT, CHAIN_KINDS, PolyChain, SpecError, Triangle,
    TriangleSpec, generate, lookup, poly_chain, resolve, row_gf_chain, spec_from_dict,
)

# -- seeds ---------------------------------------------------------------------


def motzkin_numbers(n_max: int) -> list[int]:
    m = [1]
    for n in range(1, n_max + 1):
        # M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}
        m.append(m[n - 1] + sum(m[k] * m[n - 2 - k] for k in range(n - 1)))
    return m


def catalan_numbers(n_max: int) -> list[int]:
    return [math.comb(2 * n, n) // (n + 1) for n in range(n_max + 1)]


def bell_numbers(n_max: int) -> list[int]:
    out, row = [1], [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out


_NAMED = {
    "monomials": ("x_k = q^k",
                  lambda n: [ExactPoly.monomial(k) for k in range(n + 1)]),
    "constant-one": ("x_k = 1",
                     lambda n: [ONE] * (n + 1)),
    "example51": ("x_0 = 1, x_k = 2^(k-1) q^k; strongly q-log-convex seed of the Motzkin "
                  "counterexample",
                  lambda n: [ONE] + [ExactPoly.monomial(k, 2 ** (k - 1))
                                     for k in range(1, n + 1)]),
    "motzkin-numbers": ("Motzkin numbers 1, 1, 2, 4, 9, 21, ...",
                        lambda n: [ExactPoly([x]) for x in motzkin_numbers(n)]),
    "catalan-numbers": ("Catalan numbers 1, 1, 2, 5, 14, 42, ...",
                        lambda n: [ExactPoly([x]) for x in catalan_numbers(n)]),
    "bell-numbers": ("Bell numbers 1, 1, 2, 5, 15, 52, ...",
                     lambda n: [ExactPoly([x]) for x in bell_numbers(n)]),
}
SEED_CORPUS = tuple(_NAMED)
NUMERIC_SEEDS = ("constant-one", "motzkin-numbers", "catalan-numbers", "bell-numbers")


@dataclass(frozen=True)
class SeedSequence:
    kind: str
    values: tuple
    note: str = ""

    @classmethod
    def named(cls, name: str, n_max: int) -> "SeedSequence":
        try:
            note, make = _NAMED[name]
        except KeyError:
            raise ValueError(f"unknown seed {name!r}") from None
        return cls(name, tuple(make(n_max)), note)

    @classmethod
    def explicit(cls, polys) -> "SeedSequence":
        vals = tuple(p if isinstance(p, ExactPoly) else
                     parse_poly(p) if isinstance(p, str) else ExactPoly([p]) for p in polys)
        return cls("explicit", vals, "caller-supplied list")

    def __len__(self):
        return len(self.values)

    @property
    def numeric(self) -> bool:
        return all(v.degree <= 0 for v in self.values)


def apply_transform(t: Triangle, seed: SeedSequence, n_max: int) -> list[ExactPoly]:
    """``y_n`` for ``n = t.start .. n_max`` (position i holds ``y_{start+i}``)."""
    if len(seed) < n_max + 1:
        raise ValueError(f"seed covers indices 0..{len(seed) - 1}, need 0..{n_max}")
    t.extend(n_max)
    out = []
    for n in range(t.start, n_max + 1):
        y = ExactPoly()
        for k, c in enumerate(t.row(n)):
            if c:
                y = y + seed.values[k].scale(c)
        out.append(y)
    return out


# -- hypothesis checks --------------------------------------------------------------


def _split_const(p: ExactPoly) -> tuple[Fraction, ExactPoly]:
    c = p.coeff(0)
    return c, p - c


def as_general_three_term(spec: TriangleSpec) -> dict[str, ExactPoly]:
    """Canonical ``r,s,t`` (functions of n) and ``f,g,h`` (functions of k):
    every constant term goes to the n-part."""
    spec = resolve(spec)
    p = spec.params
    if spec.family == AFFINE:
        return {"r": ExactPoly([p["a3"], p["a0"]]), "f": ExactPoly([0, p["a2"]]),
                "s": ExactPoly([p["b3"], p["b0"]]), "g": ExactPoly([0, p["b2"]]),
                "t": ExactPoly(), "h": ExactPoly()}
    if spec.family == QUADRATIC:
        return {"r": ExactPoly([p["a3"], p["a0"]]), "f": ExactPoly([0, p["a2"], p["a1"]]),
                "s": ExactPoly([p["b3"], p["b0"]]), "g": ExactPoly([0, p["b2"], p["b1"]]),
                "t": ExactPoly(), "h": ExactPoly()}
    if spec.family == GENERAL:
        out = {}
        for npart, kpart in (("r", "f"), ("s", "g"), ("t", "h")):
            c, rest = _split_const(p[kpart])
            out[npart] = p[npart] + c
            out[kpart] = rest
        return out
    raise SpecError(f"{spec.family} is not a left three-term recurrence")


def _monotone_clauses(name, fn, domain):
    issues = []
    vals = [(x, fn(x)) for x in domain]
    for x, v in vals:
        if v < 0:
            issues.append({"function": name, "clause": "nonnegative", "at": x, "value": v})
            break
    for (x0, v0), (x1, v1) in zip(vals, vals[1:]):
        if v1 < v0:
            issues.append({"function": name, "clause": "increasing", "at": x1,
                           "value": v1, "previous": v0})
            break
    return issues


def check_preservation_hypotheses(spec: TriangleSpec, n_max: int,
                               k_max: int | None = None) -> PropertyReport:
    """Coefficient functions nonnegative and nondecreasing, triangle TP_2.

    Each function is checked where the recurrence actually uses it: r, s, t
    at every generated row index n > start; f at k >= 0, g at k >= 1,
    h at k >= 2.
    """
    prop = "preservation_hypotheses"
    k_max = n_max if k_max is None else k_max
    top = max(n_max, k_max)
    spec = resolve(spec)
    rng = {"n": [spec.initial.start + 1, top], "k": [0, top], "tp_rows": n_max}
    try:
        fns = as_general_three_term(spec)
    except SpecError as exc:
        return PropertyReport.fail(prop, {"clause": "family", "reason": str(exc)}, rng)
    ndom = range(spec.initial.start + 1, top + 1)
    issues = []
    for name in ("r", "s", "t"):
        issues += _monotone_clauses(name, fns[name], ndom)
    for name, lo in (("f", 0), ("g", 1), ("h", 2)):
        issues += _monotone_clauses(name, fns[name], range(lo, top + 1))
    tp = is_tp_r(generate(spec, n_max), 2, n_max)
    if not tp.passed:
        issues.append({"function": None, "clause": "TP2", "detail": tp.witness})
    split = {k: v.to_text("n" if k in "rst" else "k") for k, v in fns.items()}
    if issues:
        return PropertyReport.fail(prop, {"clause": issues[0]["clause"], "violations": issues,
                                          "split": split}, rng)
    return PropertyReport.ok(prop, rng, {"split": split})


def check_three_term_hypotheses(fk: ExactPoly, gk: ExactPoly, hk: ExactPoly, k_max: int) -> PropertyReport:
    """f, g, h nonnegative nondecreasing on 0..k_max and
    ``g_k g_{k+1} - h_k f_{k+1} >= 0`` for k < k_max."""
    prop = "three_term_hypotheses"
    rng = {"k": [0, k_max]}
    issues = []
    for name, fn in (("f", fk), ("g", gk), ("h", hk)):
        issues += _monotone_clauses(name, fn, range(k_max + 1))
    for k in range(k_max):
        v = gk(k) * gk(k + 1) - hk(k) * fk(k + 1)
        if v < 0:
            issues.append({"function": None, "clause": "g_k g_k+1 >= h_k f_k+1", "at": k,
                           "value": v})
            break
    if issues:
        return PropertyReport.fail(prop, {"clause": issues[0]["clause"], "violations": issues},
                                   rng)
    return PropertyReport.ok(prop, rng)


# -- C2 sign pattern ---------------------------------------------------------------


@dataclass(frozen=True)
class CkTable:
    m: int
    n: int
    t: int
    entries: tuple  # T_k(m, n, t) for k = 0 .. t // 2


def compute_ck_table(tri: Triangle, m: int, n: int, tt: int) -> CkTable:
    if not (m >= n >= 1):
        raise ValueError("need m >= n >= 1")
    if not (0 <= tt <= m + n):
        raise ValueError("need 0 <= t <= m + n")
    if n - 1 < tri.start:
        raise ValueError(f"row {n - 1} precedes the triangle's first row {tri.start}")
    tri.extend(m + 1)
    T = tri.entry
    out = []
    for k in range(tt // 2 + 1):
        if 2 * k < tt:
            v = (T(n - 1, k) * T(m + 1, tt - k) + T(m + 1, k) * T(n - 1, tt - k)
                 - T(m, k) * T(n, tt - k) - T(n, k) * T(m, tt - k))
        else:
            v = T(n - 1, k) * T(m + 1, k) - T(n, k) * T(m, k)
        out.append(v)
    return CkTable(m, n, tt, tuple(out))


def check_c2(table: CkTable) -> PropertyReport:
    """Nonnegative prefix then strictly negative suffix (either may be empty)."""
    rng = {"m": table.m, "n": table.n, "t": table.t, "k": [0, len(table.entries) - 1]}
    r = -1
    seen_negative = False
    for k, v in enumerate(table.entries):
        if v < 0:
            seen_negative = True
        elif seen_negative:
            return PropertyReport.fail(
                "C2", {"m": table.m, "n": table.n, "t": table.t, "k": k, "value": v,
                       "entries": list(table.entries)}, rng)
        else:
            r = k
    return PropertyReport.ok("C2", rng, {"r": r})


def scan_c2(tri: Triangle, m_max: int) -> PropertyReport:
    """C2 over all m >= n >= 1 (m <= m_max), 0 <= t <= m + n, in that order."""
    rng = {"m": [1, m_max]}
    checked = 0
    for m in range(max(1, tri.start + 1), m_max + 1):
        for n in range(max(1, tri.start + 1), m + 1):
            for tt in range(m + n + 1):
                rep = check_c2(compute_ck_table(tri, m, n, tt))
                checked += 1
                if not rep.passed:
                    return PropertyReport.fail("C2_scan", rep.witness, rng)
    return PropertyReport.ok("C2_scan", rng, {"tables": checked})


# -- preservation and stability campaigns ----------------------------------------------

MODES = ("strong-q", "q", "numeric-log-convex")


def _sequence_check(polys, mode, start=0, n_max=None):
    if mode == "numeric-log-convex":
        if any(p.degree > 0 for p in polys):
            raise ValueError("numeric-log-convex mode needs constant sequences")
        return is_log_convex([p.coeff(0) for p in polys], start=start)
    return is_strongly_q_log_convex(polys, strong=(mode == "strong-q"), start=start)


def verify_preservation(tri: Triangle, seed: SeedSequence, n_max: int,
                        mode: str = "strong-q") -> PropertyReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    prop = f"preserves_{mode}"
    name = tri.spec.builtin or tri.spec.family
    rng = {"n": [tri.start, n_max], "triangle": name, "seed": seed.kind, "mode": mode}
    seed_rep = _sequence_check(list(seed.values[: n_max + 1]), mode)
    if not seed_rep.passed:
        return PropertyReport(prop, INPUT_FAIL, {"input": seed_rep.to_dict()}, rng)
    ys = apply_transform(tri, seed, n_max)
    out = _sequence_check(ys, mode, start=tri.start)
    if out.passed:
        return PropertyReport.ok(prop, rng)
    return PropertyReport.fail(prop, {"output": out.witness}, rng)


def stability_chain(kind: str, n_max: int, fixed_q=None, m=None, z=None) -> PolyChain:
    """Polynomials a stability campaign iterates over.

    Triangle-backed kinds (including both Eulerian families) use row
    generating functions; the q-analogs use their polynomial recurrences.
    """
    if kind in ("q-eulerianA", "q-eulerianB"):
        return poly_chain(kind, n_max, fixed_q=fixed_q)
    try:
        spec = lookup(kind, z=z, m=m)
    except SpecError:
        if kind in CHAIN_KINDS:
            return poly_chain(kind, n_max, fixed_q=fixed_q, m=m)
        raise ValueError(f"unknown stability family {kind!r}") from None
    return row_gf_chain(generate(spec, n_max), n_max)


def iterated_differences(chain: PolyChain, n_max: int) -> dict[int, ExactPoly]:
    """``f[n+1] f[n-1] - f[n]^2`` for ``start < n < n_max``."""
    return {n: chain[n + 1] * chain[n - 1] - chain[n] * chain[n]
            for n in range(chain.start + 1, n_max)}


def verify_chain_stability(chain: PolyChain, n_max: int, strict: bool = False,
                           label: str | None = None) -> PropertyReport:
    prop = "iterated_hurwitz_stable" if strict else "iterated_generalized_stable"
    rng = {"n": [chain.start + 1, n_max - 1], "family": label or chain.kind}
    check = hurwitz_stable if strict else generalized_stable
    degenerate = []
    for n, d in iterated_differences(chain, n_max).items():
        if d.is_zero():
            # the zero polynomial is treated as stable by convention
            degenerate.append(n)
            continue
        if d.lc <= 0:
            return PropertyReport.fail(prop, {"n": n, "reason": "leading coefficient "
                                              "not positive", "difference": d}, rng)
        rep = check(d)
        if not rep.passed:
            return PropertyReport.fail(prop, {"n": n, "difference": d, **rep.witness}, rng)
    wit = {"degenerate_zero_differences": degenerate} if degenerate else {}
    return PropertyReport.ok(prop, rng, wit)


def verify_stability_family(kind: str, fixed_q=None, n_max: int = 10, m=None, z=None,
                            strict: bool = False) -> PropertyReport:
    chain = stability_chain(kind, n_max, fixed_q=fixed_q, m=m, z=z)
    label = kind if fixed_q is None else f"{kind}(q={as_rat(fixed_q)})"
    return verify_chain_stability(chain, n_max, strict=strict, label=label)


RUN_CHAINS = ("runsA", "longest-alternating", "up-down", "runsB")


def verify_qlogconvex_runs(n_max: int) -> PropertyReport:
    subs = {}
    for kind in RUN_CHAINS:
        ch = poly_chain(kind, n_max)
        subs[kind] = is_strongly_q_log_convex(list(ch.polys), strong=False, start=ch.start)
    rng = {"n_max": n_max, "chains": list(RUN_CHAINS)}
    wit = {k: r.to_dict() for k, r in subs.items()}
    if all(r.passed for r in subs.values()):
        return PropertyReport.ok("runs_q_log_convex", rng, wit)
    return PropertyReport.fail("runs_q_log_convex", wit, rng)


def general_poly_chain(params: dict, f0: ExactPoly, n_max: int) -> PolyChain:
    """``f_n = [a1 n + a2 + (b1 n + b2) q + (c1 n + c2) q^2] f_{n-1}
    + q (a3 + b3 q + c3 q^2) f'_{n-1}``."""
    p = {k: as_rat(params.get(k, 0)) for k in
         ("a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3")}
    der = ExactPoly([0, p["a3"], p["b3"], p["c3"]])
    polys = [f0]
    for n in range(1, n_max + 1):
        lin = ExactPoly([p["a1"] * n + p["a2"], p["b1"] * n + p["b2"], p["c1"] * n + p["c2"]])
        prev = polys[-1]
        polys.append(lin * prev + der * prev.derivative())
    return PolyChain("general", 0, tuple(polys))


# -- campaign manifests -------------------------------------------------------------------


def _entry_triangle(entry: dict) -> tuple[str, TriangleSpec]:
    if "builtin" in entry:
        spec = lookup(entry["builtin"], z=entry.get("z"), m=entry.get("m"))
        name = entry["builtin"]
        for key in ("z", "m"):
            if entry.get(key) is not None:
                name += f"({key}={as_rat(str(entry[key]))})"
        return name, spec
    if "spec" in entry:
        spec = spec_from_dict(entry["spec"])
        return resolve(spec).builtin or spec.family, spec
    raise ValueError("campaign entry needs 'builtin' or 'spec'")


def _entry_seed(entry: dict, n_max: int) -> SeedSequence:
    seed = entry.get("seed", "monomials")
    if isinstance(seed, str):
        return SeedSequence.named(seed, n_max)
    if isinstance(seed, dict) and "explicit" in seed:
        return SeedSequence.explicit(seed["explicit"])
    if isinstance(seed, list):
        return SeedSequence.explicit(seed)
    raise ValueError(f"bad seed {seed!r}")


@dataclass(frozen=True)
class CampaignResult:
    triangle: str
    seed: str
    mode: str
    n_max: int
    report: PropertyReport


def run_campaign(entries: list[dict]) -> list[CampaignResult]:
    results = []
    for entry in entries:
        n_max = int(entry.get("n_max", 10))
        mode = entry.get("mode", "strong-q")
        name, spec = _entry_triangle(entry)
        seed = _entry_seed(entry, n_max)
        rep = verify_preservation(generate(spec, n_max), seed, n_max, mode)
        results.append(CampaignResult(name, seed.kind, mode, n_max, rep))
    results.sort(key=lambda r: (r.triangle, r.seed, r.n_max, r.mode))
    return results


def campaign_summary_csv(results: list[CampaignResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["triangle", "seed", "mode", "n_max", "verdict"])
    for r in results:
        w.writerow([r.triangle, r.seed, r.mode, r.n_max, r.report.verdict])
    return buf.getvalue()
