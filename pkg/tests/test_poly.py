from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import polys, rats
from posicert.poly import (
    ONE, Q, ZERO, ExactPoly, coeffwise_geq, exact_quotient, format_poly, four_seq_identity,
    gcd, parse_poly, parse_rat, squarefree_decomposition, squarefree_part,
)

EX = parse_poly("q - q^2 + 2*q^3")


def P(*cs):
    return ExactPoly(cs)


class TestRing:
    @given(polys(), polys())
    def test_commutative(self, f, g):
        assert f + g == g + f
        assert f * g == g * f

    @given(polys(), polys(), polys())
    def test_associative_distributive(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h

    @given(polys())
    def test_sub_self(self, f):
        assert (f - f).is_zero()

    @given(polys(), polys())
    def test_product_rule(self, f, g):
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()

    @given(polys(), polys(), rats)
    def test_eval_multiplicative(self, f, g, x):
        assert (f * g)(x) == f(x) * g(x)
        assert (f + g)(x) == f(x) + g(x)

    @given(polys(), rats)
    def test_sign_at_matches_eval(self, f, x):
        v = f(x)
        assert f.sign_at(x) == (v > 0) - (v < 0)


def test_degree_and_zero():
    assert ZERO.degree == float("-inf")
    assert P(0, 0).is_zero()
    assert (P(1, 2) * ZERO).is_zero()
    assert P(1, 0, 3, 0).degree == 2


def test_listed_examples():
    assert P(1, 1) * P(1, 1) == P(1, 2, 1)
    assert parse_poly("2+4y+3y^2")(0) == 2
    assert EX(1) == 2
    assert P(1, 2, 1) - P(1, 1) == P(0, 1, 1)


class TestPartialOrder:
    def test_examples(self):
        assert coeffwise_geq(EX, EX).passed
        r = coeffwise_geq(EX, ZERO)
        assert not r.passed and r.witness["power"] == 2 and r.witness["value"] == -1
        assert coeffwise_geq(P(1, 2, 1), P(1, 1)).passed

    @given(polys(), polys(), polys())
    def test_transitive(self, f, g, h):
        if coeffwise_geq(f, g).passed and coeffwise_geq(g, h).passed:
            assert coeffwise_geq(f, h).passed

    @given(polys(), polys())
    def test_antisymmetric(self, f, g):
        if coeffwise_geq(f, g).passed and coeffwise_geq(g, f).passed:
            assert f == g


class TestFourSequence:
    def test_examples(self):
        assert four_seq_identity([1, 0], [0, 1], [1, 0], [0, 1]) == (1, 1)
        assert four_seq_identity([1] * 4, [1] * 4, [1] * 4, [1] * 4) == (0, 0)
        assert four_seq_identity([1, 2, 3], [1, 2, 3], [5, 0, 1], [2, 2, 7]) == (0, 0)

    def test_mismatch(self):
        with pytest.raises(ValueError):
            four_seq_identity([1], [1, 2], [1], [1])

    @given(st.integers(1, 8).flatmap(lambda n: st.lists(st.lists(rats, min_size=n, max_size=n),
                                                         min_size=4, max_size=4)))
    def test_identity(self, seqs):
        lhs, rhs = four_seq_identity(*seqs)
        assert lhs == rhs


class TestGcd:
    def test_examples(self):
        assert gcd(P(1, 2, 1), P(1, 1)) == P(1, 1)
        assert squarefree_part(P(1, 2, 1)) == P(1, 1)
        assert squarefree_part(EX) == EX.monic()
        assert gcd(EX, EX.derivative()) == ONE

    def test_zero_zero(self):
        with pytest.raises(ValueError):
            gcd(ZERO, ZERO)

    @given(polys(4), polys(4), polys(3))
    def test_common_factor_divides(self, a, b, c):
        if c.is_zero() or (a.is_zero() and b.is_zero()):
            return
        g = gcd(a * c, b * c)
        assert g.lc == 1
        exact_quotient(a * c, g)
        exact_quotient(b * c, g)
        exact_quotient(g, c.monic())

    def test_decomposition(self):
        f = P(1, 1) ** 3 * P(-2, 1) * Q ** 2
        parts = squarefree_decomposition(f)
        assert parts[0] == P(-2, 1)
        assert parts[1] == Q
        assert parts[2] == P(1, 1)


class TestText:
    def test_canonical_form(self):
        assert format_poly(EX) == "q - q^2 + 2*q^3"
        assert format_poly(ZERO) == "0"
        assert format_poly(P(Fraction(-1, 2), 0, 3)) == "-1/2 + 3*q^2"

    def test_verbose_form_accepted(self):
        assert parse_poly("0 + 1*q - 1*q^2 + 2*q^3") == EX
        assert parse_poly("1 + x^2") == P(1, 0, 1)

    @pytest.mark.parametrize("bad", ["", "1+", "q^-1", "1 + 2**q", "1/0", "q + y"])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_poly(bad)

    @given(polys(8))
    def test_round_trip(self, f):
        assert parse_poly(format_poly(f)) == f

    def test_parse_rat(self):
        assert parse_rat("-3/6") == Fraction(-1, 2)
        with pytest.raises(ValueError):
            parse_rat("0.5")
