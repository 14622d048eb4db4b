"""Log-convexity, (strong) q-log-convexity and total positivity of order r."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm

from . import kernels
from .poly import ExactPoly, as_rat
from .report import PropertyReport


def is_log_convex(seq, strict_positive: bool = False, start: int = 0) -> PropertyReport:
    """``a[k-1] a[k+1] >= a[k]^2`` at every interior k of a nonnegative sequence."""
    a = [as_rat(x) for x in seq]
    rng = {"indices": [start, start + len(a) - 1]}
    for i, x in enumerate(a):
        if x < 0 or (strict_positive and x == 0):
            return PropertyReport.fail(
                "log_convex", {"reason": "entry not positive" if strict_positive
                               else "negative entry", "k": start + i, "value": x}, rng)
    for k in range(1, len(a) - 1):
        d = a[k - 1] * a[k + 1] - a[k] * a[k]
        if d < 0:
            return PropertyReport.fail("log_convex", {"k": start + k, "value": d}, rng)
    return PropertyReport.ok("log_convex", rng)


class _Products:
    """Memoized pairwise products ``f_i f_j``."""

    def __init__(self, polys):
        self.polys = polys
        self._cache = {}

    def __call__(self, i, j):
        key = (i, j) if i <= j else (j, i)
        p = self._cache.get(key)
        if p is None:
            p = self._cache[key] = self.polys[i] * self.polys[j]
        return p


def is_strongly_q_log_convex(polys, n_max: int | None = None, strong: bool = True,
                             start: int = 0) -> PropertyReport:
    """Check ``f[n+1] f[m-1] - f[n] f[m] >=_q 0`` for 1 <= m <= n <= n_max-1.

    With ``strong=False`` only ``m == n`` is checked (q-log-convexity).
    Indices are positions in ``polys`` offset by ``start``; the witness is
    the first failure in (n, m) lexicographic order.
    """
    polys = [p if isinstance(p, ExactPoly) else ExactPoly([p]) for p in polys]
    top = len(polys) - 1 if n_max is None else n_max - start
    if top > len(polys) - 1:
        raise ValueError(f"need members through index {start + top}")
    prop = "strongly_q_log_convex" if strong else "q_log_convex"
    rng = {"indices": [start, start + top]}
    prod = _Products(polys)
    for n in range(1, top):
        for m in (range(1, n + 1) if strong else (n,)):
            diff = prod(n + 1, m - 1) - prod(n, m)
            for i, c in enumerate(diff.coeffs):
                if c < 0:
                    return PropertyReport.fail(
                        prop, {"n": start + n, "m": start + m, "power": i, "value": c,
                               "difference": diff}, rng)
    return PropertyReport.ok(prop, rng)


def is_q_log_convex(polys, n_max: int | None = None, start: int = 0) -> PropertyReport:
    return is_strongly_q_log_convex(polys, n_max, strong=False, start=start)


def _integer_matrix(rows) -> tuple[list[list[int]], int]:
    d = 1
    for r in rows:
        for x in r:
            if x.denominator != 1:
                d = lcm(d, x.denominator)
    return [[x.numerator * (d // x.denominator) for x in r] for r in rows], d


def _as_matrix(t, n_max):
    if hasattr(t, "matrix"):
        rows = t.matrix(n_max)
        row0 = getattr(t, "start", 0)
    else:
        rows, row0 = t, 0
    return [[as_rat(x) for x in r] for r in rows], row0


def is_tp_r(t, r: int, n_max: int | None = None) -> PropertyReport:
    """Every minor of order <= r nonnegative.

    ``t`` is a Triangle (rows start..n_max, columns 0..n_max) or any
    rectangular exact matrix.  Minors are taken in order of size, then row
    set, then column set; the first negative one is the witness.
    """
    if r < 1:
        raise ValueError("order must be at least 1")
    rows, row0 = _as_matrix(t, n_max)
    prop = f"TP_{r}"
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    rng = {"order": r, "rows": [row0, row0 + nr - 1], "cols": [0, nc - 1]}
    m, d = _integer_matrix(rows)

    def fail(order, ri, ci, v):
        return PropertyReport.fail(
            prop, {"order": order, "rows": [row0 + i for i in ri], "cols": list(ci),
                   "value": Fraction(v, d ** order)}, rng)

    for i in range(nr):
        for j in range(nc):
            if m[i][j] < 0:
                return fail(1, (i,), (j,), m[i][j])
    if r >= 2:
        hit = kernels.first_negative_2minor(m)
        if hit is not None:
            i1, i2, j1, j2, v = hit
            return fail(2, (i1, i2), (j1, j2), v)
    for order in range(3, min(r, nr, nc) + 1):
        for ri in combinations(range(nr), order):
            sub = [m[i] for i in ri]
            for ci in combinations(range(nc), order):
                v = kernels.bareiss_det([[row[j] for j in ci] for row in sub])
                if v < 0:
                    return fail(order, ri, ci, v)
    return PropertyReport.ok(prop, rng)
