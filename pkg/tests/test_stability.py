from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rats
from posicert.poly import ExactPoly, parse_poly
from posicert.roots import is_generalized_sturm_sequence
from posicert.positivity import is_q_log_convex
from posicert.stability import (
    generalized_stable, hurwitz_matrix, hurwitz_stable, quadratic_stable_closed_form,
)
from posicert.transform import general_poly_chain, iterated_differences
from posicert.poly import coeffwise_geq

EX = parse_poly("q - q^2 + 2*q^3")


def test_examples():
    assert hurwitz_stable(ExactPoly([1, 1, 1])).passed
    assert not hurwitz_stable(ExactPoly([1, 0, 1])).passed  # zeros on the axis
    assert not generalized_stable(EX).passed
    assert generalized_stable(ExactPoly([0, 0, 2])).passed
    assert generalized_stable(parse_poly("4*q^3 + 4*q^4 + 4*q^5")).passed
    # positive coefficients yet unstable: (q+2)(q^2 - q + 3) expanded
    f = ExactPoly([2, 1]) * ExactPoly([3, -1, 1])
    assert all(c > 0 for c in f.coeffs)
    r = hurwitz_stable(f)
    assert not r.passed and r.witness["reason"] == "nonpositive Hurwitz minor"


def test_hurwitz_matrix_layout():
    # c0 + c1 x + c2 x^2 + c3 x^3 -> [[c2, c0, 0], [c3, c1, 0], [0, c2, c0]]
    assert hurwitz_matrix([4, 3, 2, 1]) == [[2, 4, 0], [1, 3, 0], [0, 2, 4]]


def test_preconditions():
    with pytest.raises(ValueError):
        hurwitz_stable(ExactPoly())
    with pytest.raises(ValueError):
        hurwitz_stable(ExactPoly([1, -1]))


@given(st.lists(rats, min_size=1, max_size=2), st.builds(Fraction, st.integers(1, 20), st.integers(1, 5)))
def test_closed_form_degree_le_2(lower, lc):
    f = ExactPoly(list(lower) + [lc])
    assert hurwitz_stable(f).passed == quadratic_stable_closed_form(f)


stable_factor = st.one_of(
    st.builds(lambda a: ExactPoly([a, 1]), st.builds(Fraction, st.integers(1, 20), st.integers(1, 5))),
    st.builds(lambda b, c: ExactPoly([c, b, 1]),
              st.builds(Fraction, st.integers(1, 20), st.integers(1, 5)),
              st.builds(Fraction, st.integers(1, 20), st.integers(1, 5))),
)


@given(st.lists(stable_factor, min_size=1, max_size=4))
def test_products_of_stable_factors(fs):
    f = ExactPoly([1])
    for g in fs:
        f = f * g
    assert hurwitz_stable(f).passed
    assert generalized_stable(f * ExactPoly([0, 0, 1])).passed


@given(st.lists(stable_factor, min_size=1, max_size=3),
       st.builds(Fraction, st.integers(1, 10), st.integers(1, 3)),
       st.builds(Fraction, st.integers(1, 10), st.integers(1, 3)))
def test_right_half_plane_pair_fails(fs, a, b):
    f = ExactPoly([a * a + b * b, -2 * a, 1])  # zeros a +/- bi
    for g in fs:
        f = f * g
    assert not hurwitz_stable(f).passed


nonneg = st.integers(0, 3)


@given(a1=nonneg, a2=nonneg, a3=nonneg, b1=st.integers(1, 3), b2=nonneg, b3=st.integers(-3, 0))
def test_polynomial_recurrence_instances(a1, a2, a3, b1, b2, b3):
    # c1 = c3 = 0 with a1 + 2 a3 >= 0 and b1 >= b3; keep only chains that
    # meet the remaining hypotheses, checked exactly
    assume(b1 + b3 >= 0)
    params = dict(a1=a1, a2=a2, a3=a3, b1=b1, b2=b2, b3=b3)
    ch = general_poly_chain(params, ExactPoly([1]), 8)
    polys = list(ch.polys)
    assume(all(all(c >= 0 for c in p.coeffs) for p in polys))
    assume(all(polys[n].degree == n for n in range(len(polys))))
    assume(is_generalized_sturm_sequence(polys).passed)
    assert is_q_log_convex(polys).passed
    for n, d in iterated_differences(ch, 8).items():
        if not d.is_zero():
            assert generalized_stable(d).passed, (params, n, d)


def test_stability_implies_q_nonnegative():
    ch = general_poly_chain(dict(a1=1, b1=1, a3=1, b3=-1), ExactPoly([1]), 9)
    for d in iterated_differences(ch, 9).values():
        if not d.is_zero() and generalized_stable(d).passed:
            assert coeffwise_geq(d, ExactPoly()).passed
