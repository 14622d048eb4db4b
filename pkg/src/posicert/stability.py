"""Hurwitz stability and generalized stability, decided exactly."""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .poly import ExactPoly
from .report import PropertyReport


def hurwitz_matrix(coeffs: list[int]) -> list[list[int]]:
    """Hurwitz matrix of ``c0 + c1 x + ... + cn x^n`` (ascending input).

    With ``b_k = c_{n-k}``, entry (i, j) (1-based) is ``b_{2j-i}``.
    """
    n = len(coeffs) - 1
    b = coeffs[::-1]
    at = lambda k: b[k] if 0 <= k <= n else 0
    return [[at(2 * j - i + 1) for j in range(n)] for i in range(n)]


def _check_leading(f: ExactPoly):
    if f.is_zero():
        raise ValueError("stability of the zero polynomial is undefined")
    if f.lc <= 0:
        raise ValueError("stability checks need a positive leading coefficient")


def hurwitz_stable(f: ExactPoly) -> PropertyReport:
    """All zeros in the open left half-plane.

    Fast-fails on a nonpositive coefficient, otherwise requires every leading
    principal minor of the Hurwitz matrix to be strictly positive.  A zero
    minor means a zero on the imaginary axis (or worse), hence FAIL.
    """
    _check_leading(f)
    rng = {"degree": f.degree}
    if f.degree == 0:
        return PropertyReport.ok("hurwitz_stable", rng)
    for i, c in enumerate(f.coeffs):
        if c <= 0:
            return PropertyReport.fail(
                "hurwitz_stable",
                {"reason": "nonpositive coefficient", "power": i, "value": c}, rng)
    ints = f.integer_primitive()
    minors = kernels.leading_minors(hurwitz_matrix(ints))
    for k, v in enumerate(minors, start=1):
        if v <= 0:
            return PropertyReport.fail(
                "hurwitz_stable",
                {"reason": "nonpositive Hurwitz minor", "minor_index": k, "value": v,
                 "scaled_poly": ExactPoly(ints)}, rng)
    return PropertyReport.ok("hurwitz_stable", rng)


def generalized_stable(f: ExactPoly) -> PropertyReport:
    """All zeros other than 0 in the open left half-plane: strip the largest
    power of q dividing f and test the cofactor."""
    _check_leading(f)
    m = f.low_order()
    cof = ExactPoly(f.coeffs[m:])
    inner = hurwitz_stable(cof)
    wit = dict(inner.witness)
    wit["stripped_power"] = m
    rng = {"degree": f.degree}
    if inner.passed:
        return PropertyReport.ok("generalized_stable", rng, wit)
    wit["cofactor"] = cof
    return PropertyReport.fail("generalized_stable", wit, rng)


def quadratic_stable_closed_form(f: ExactPoly) -> bool:
    """Closed-form stability for degree <= 2 with positive leading term:
    every coefficient strictly positive."""
    if f.degree > 2:
        raise ValueError("closed form only covers degree <= 2")
    return all(c > 0 for c in f.coeffs)
