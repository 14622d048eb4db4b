"""Sturm chains, exact real root isolation, interlacing.

Every decision here is made from signs of integer polynomials evaluated at
rational points, so no approximation enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .poly import ExactPoly, _divmod, exact_quotient, gcd, squarefree_decomposition, squarefree_part
from .report import PropertyReport


def _primitive(f: ExactPoly) -> ExactPoly:
    return ExactPoly(f.integer_primitive())


@dataclass(frozen=True)
class SturmChain:
    polys: tuple

    def _ints(self):
        ints = getattr(self, "_cache", None)
        if ints is None:
            ints = [[c.numerator for c in p.coeffs] for p in self.polys]
            object.__setattr__(self, "_cache", ints)
        return ints

    def variations(self, x) -> int:
        """Sign variations at a rational x (zeros skipped)."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        count, last = 0, 0
        for cs in self._ints():
            v = kernels.homog_eval(cs, p, q)
            s = (v > 0) - (v < 0)
            if s:
                if last and s != last:
                    count += 1
                last = s
        return count

    def variations_at_infinity(self, positive: bool) -> int:
        count, last = 0, 0
        for f in self.polys:
            s = 1 if f.lc > 0 else -1
            if not positive and (len(f.coeffs) - 1) % 2:
                s = -s
            if last and s != last:
                count += 1
            last = s
        return count

    def count(self, lo=None, hi=None) -> int:
        """Distinct real roots in ``(lo, hi]``; None means an infinite end."""
        vlo = self.variations_at_infinity(False) if lo is None else self.variations(lo)
        vhi = self.variations_at_infinity(True) if hi is None else self.variations(hi)
        return vlo - vhi


def sturm_chain(f: ExactPoly) -> SturmChain:
    """f, f', then negated remainders; each member rescaled by a positive
    constant to a primitive integer polynomial (signs are unchanged)."""
    if f.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    chain = [_primitive(f)]
    if f.degree > 0:
        chain.append(_primitive(f.derivative()))
        while True:
            r = _divmod(chain[-2], chain[-1])[1]
            if r.is_zero():
                break
            chain.append(_primitive(-r))
    return SturmChain(tuple(chain))


def count_real_roots(f: ExactPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of f in ``(lo, hi]``."""
    if f.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    return sturm_chain(squarefree_part(f)).count(lo, hi)


def cauchy_bound(f: ExactPoly) -> Fraction:
    """Strict bound: every complex root has modulus below it."""
    lc = abs(f.lc)
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint open intervals ``(lo, hi)`` sorted ascending, each holding
    exactly one distinct real root, with that root's multiplicity."""

    intervals: tuple
    squarefree: ExactPoly

    def __len__(self):
        return len(self.intervals)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, _, m in self.intervals)

    def refine(self, width) -> "RootIsolation":
        width = Fraction(width)
        chain = sturm_chain(self.squarefree)
        out = []
        for lo, hi, mult in self.intervals:
            while hi - lo > width:
                mid = _split_point(self.squarefree, lo, hi)
                if chain.count(lo, mid) == 1:
                    hi = mid
                else:
                    lo = mid
            out.append((lo, hi, mult))
        return RootIsolation(tuple(out), self.squarefree)


def _split_point(f: ExactPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """Midpoint of (lo, hi), nudged off any root of f."""
    mid = (lo + hi) / 2
    step = (hi - lo) / 8
    while f.sign_at(mid) == 0:
        mid += step
        step /= 2
    return mid


def _isolate_squarefree(f: ExactPoly, chain: SturmChain) -> list:
    if f.degree <= 0:
        return []
    b = cauchy_bound(f)
    out = []
    stack = [(-b, b, chain.count(-b, b))]
    while stack:
        lo, hi, c = stack.pop()
        if c == 0:
            continue
        if c == 1:
            out.append((lo, hi))
            continue
        mid = _split_point(f, lo, hi)
        left = chain.count(lo, mid)
        # push right first so the left half is handled first
        stack.append((mid, hi, c - left))
        stack.append((lo, mid, left))
    return out


def isolate_roots(f: ExactPoly) -> RootIsolation:
    if f.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sqf = squarefree_part(f)
    chain = sturm_chain(sqf)
    spans = _isolate_squarefree(sqf, chain)
    factors = squarefree_decomposition(f)
    fchains = [(i + 1, sturm_chain(g)) for i, g in enumerate(factors) if g.degree > 0]
    intervals = []
    for lo, hi in spans:
        mult = next(i for i, ch in fchains if ch.count(lo, hi) == 1)
        intervals.append((lo, hi, mult))
    return RootIsolation(tuple(intervals), sqf)


def is_real_rooted(f: ExactPoly) -> PropertyReport:
    if f.is_zero():
        raise ValueError("real-rootedness of the zero polynomial is undefined")
    rng = {"degree": max(f.degree, 0)}
    if f.degree <= 0:
        return PropertyReport.ok("real_rooted", rng)
    sqf = squarefree_part(f)
    n = sturm_chain(sqf).count()
    if n == sqf.degree:
        return PropertyReport.ok("real_rooted", rng, {"distinct_real_roots": n})
    return PropertyReport.fail(
        "real_rooted",
        {"distinct_real_roots": n, "distinct_roots": sqf.degree, "poly": f},
        rng,
    )


def _real_rooted(f: ExactPoly) -> bool:
    return f.is_zero() or is_real_rooted(f).passed


def interlaces(g: ExactPoly, f: ExactPoly) -> PropertyReport:
    """Decide whether g interlaces f (zeros of g weakly separate those of f).

    Common zeros are divided out first; what remains must be squarefree and
    strictly alternate, starting and ending with a zero of f.
    """
    prop = "interlaces"
    rng = {"deg_g": g.degree if not g.is_zero() else None,
           "deg_f": f.degree if not f.is_zero() else None}
    if f.is_zero() or g.is_zero():
        other = g if f.is_zero() else f
        if _real_rooted(other):
            return PropertyReport.ok(prop, rng, {"convention": "zero polynomial"})
        return PropertyReport.fail(prop, {"reason": "not real-rooted", "poly": other}, rng)
    if f.degree <= 1 and g.degree <= 0:
        return PropertyReport.ok(prop, rng, {"convention": "constant vs linear"})
    for name, p in (("g", g), ("f", f)):
        if not _real_rooted(p):
            return PropertyReport.fail(prop, {"reason": "not real-rooted", "which": name,
                                              "poly": p}, rng)
    if f.degree != g.degree + 1:
        return PropertyReport.fail(
            prop, {"reason": "degree gap is not 1", "deg_f": f.degree, "deg_g": g.degree}, rng
        )
    h = gcd(f, g)
    fr, gr = exact_quotient(f, h), exact_quotient(g, h)
    if gr.degree == 0:
        return PropertyReport.ok(prop, rng, {"common": h})
    for name, p in (("f", fr), ("g", gr)):
        if squarefree_part(p).degree != p.degree:
            return PropertyReport.fail(
                prop, {"reason": "repeated zero not shared", "which": name, "poly": p}, rng
            )
    iso = isolate_roots(fr * gr)
    fch = sturm_chain(fr)
    labels = ["f" if fch.count(lo, hi) == 1 else "g" for lo, hi, _ in iso.intervals]
    expected = ["f" if i % 2 == 0 else "g" for i in range(len(labels))]
    for i, (got, want) in enumerate(zip(labels, expected)):
        if got != want:
            j = max(i - 1, 0)
            a, b = iso.intervals[j], iso.intervals[i]
            return PropertyReport.fail(
                prop,
                {"reason": "zeros do not alternate",
                 "intervals": [[a[0], a[1], labels[j]], [b[0], b[1], labels[i]]]},
                rng,
            )
    return PropertyReport.ok(prop, rng, {"common": h})


def is_generalized_sturm_sequence(polys) -> PropertyReport:
    """Standard, real-rooted members with each one interlacing the next."""
    prop = "generalized_sturm_sequence"
    polys = list(polys)
    rng = {"indices": [0, len(polys) - 1]}
    for i, p in enumerate(polys):
        if not p.is_standard():
            return PropertyReport.fail(prop, {"index": i, "reason": "not standard",
                                              "poly": p}, rng)
        if not _real_rooted(p):
            return PropertyReport.fail(prop, {"index": i, "reason": "not real-rooted",
                                              "poly": p}, rng)
    for i in range(len(polys) - 1):
        rep = interlaces(polys[i], polys[i + 1])
        if not rep.passed:
            return PropertyReport.fail(prop, {"index": i + 1, "reason": "interlacing",
                                              "detail": rep.witness}, rng)
    return PropertyReport.ok(prop, rng)
