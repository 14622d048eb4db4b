import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from posicert.poly import ExactPoly, parse_poly
from posicert.report import INPUT_FAIL
from posicert.roots import is_generalized_sturm_sequence
from posicert.transform import (
    SEED_CORPUS, SeedSequence, apply_transform, as_general_three_term, bell_numbers,
    campaign_summary_csv, catalan_numbers, check_c2, check_preservation_hypotheses,
    check_three_term_hypotheses, compute_ck_table, iterated_differences, motzkin_numbers, run_campaign,
    scan_c2, stability_chain, verify_chain_stability, verify_preservation,
    verify_stability_family,
)
from posicert.triangle import affine, generate, lookup, row_gf_chain

K = ExactPoly([0, 1])


def test_sequences():
    assert motzkin_numbers(7) == [1, 1, 2, 4, 9, 21, 51, 127]
    assert catalan_numbers(5) == [1, 1, 2, 5, 14, 42]
    assert bell_numbers(6) == [1, 1, 2, 5, 15, 52, 203]


class TestApply:
    def test_identity_triangle(self):
        ident = generate(affine(b3=1), 6)
        seed = SeedSequence.named("example51", 6)
        assert apply_transform(ident, seed, 6) == list(seed.values)

    def test_stirling_gives_bell(self):
        ys = apply_transform(generate(lookup("stirling2"), 10),
                             SeedSequence.named("constant-one", 10), 10)
        assert [y.coeff(0) for y in ys] == bell_numbers(10)

    def test_example_outputs(self):
        ys = apply_transform(generate(lookup("motzkin"), 3), SeedSequence.named("example51", 3), 3)
        assert ys == [parse_poly(s) for s in
                      ("1", "1 + q", "2 + 2*q + 2*q^2", "4 + 5*q + 6*q^2 + 4*q^3")]
        assert ys[3] * ys[1] - ys[2] * ys[2] == parse_poly("q - q^2 + 2*q^3")

    @given(st.lists(st.integers(-5, 5), min_size=7, max_size=7),
           st.lists(st.integers(-5, 5), min_size=7, max_size=7), st.integers(-3, 3))
    def test_linear(self, xs, zs, c):
        tri = generate(lookup("eulerianA"), 6)
        a, b = SeedSequence.explicit(xs), SeedSequence.explicit(zs)
        mix = SeedSequence.explicit([x + c * z for x, z in zip(xs, zs)])
        ya, yb, ym = (apply_transform(tri, s, 6) for s in (a, b, mix))
        assert ym == [p + q.scale(c) for p, q in zip(ya, yb)]

    def test_short_seed(self):
        with pytest.raises(ValueError):
            apply_transform(generate(lookup("pascal"), 5), SeedSequence.explicit([1, 1]), 5)

    def test_unknown_seed(self):
        with pytest.raises(ValueError):
            SeedSequence.named("nope", 3)


class TestHypotheses:
    def test_canonical_split(self):
        fns = as_general_three_term(lookup("jacobi-stirling-2", z=2))
        assert fns["r"] == ExactPoly() and fns["f"] == ExactPoly([0, 2, 1])
        assert fns["s"] == ExactPoly([1])
        fns = as_general_three_term(lookup("runsB"))
        assert fns["r"] == ExactPoly([-1]) and fns["f"] == ExactPoly([0, 2])

    @pytest.mark.parametrize("name,kw", [
        ("pascal", {}), ("stirling2", {}), ("stirling1-signless", {}),
        ("jacobi-stirling-2", {"z": 1}), ("jacobi-stirling-1", {"z": 0}),
        ("central-factorial-V", {}), ("ramanujan", {}), ("lah-associated", {"m": 2}),
    ])
    def test_passing(self, name, kw):
        assert check_preservation_hypotheses(lookup(name, **kw), 10).passed

    @pytest.mark.parametrize("name,clause", [
        ("eulerianA", "nonnegative"), ("runsB", "nonnegative"), ("motzkin", "family"),
    ])
    def test_failing(self, name, clause):
        r = check_preservation_hypotheses(lookup(name), 10)
        assert not r.passed and r.witness["clause"] == clause

    def test_three_term_condition(self):
        assert check_three_term_hypotheses(K, K, K * K, 6).witness["violations"][0]["at"] == 2
        assert check_three_term_hypotheses(K, K + ExactPoly([1]), K, 6).passed


class TestC2:
    def test_stirling_table(self):
        tab = compute_ck_table(generate(lookup("stirling2"), 5), 3, 2, 3)
        rep = check_c2(tab)
        assert rep.passed and rep.witness["r"] == 1

    def test_motzkin_scan(self):
        rep = scan_c2(generate(lookup("motzkin"), 5), 4)
        assert not rep.passed
        w = rep.witness
        assert (w["m"], w["n"], w["t"], w["k"]) == (2, 2, 2, 1)
        assert w["entries"] == [-1, 1]

    def test_scan_deterministic(self):
        a = scan_c2(generate(lookup("motzkin"), 5), 4).to_json()
        b = scan_c2(generate(lookup("motzkin"), 5), 4).to_json()
        assert a == b

    def test_bounds(self):
        tri = generate(lookup("pascal"), 5)
        with pytest.raises(ValueError):
            compute_ck_table(tri, 1, 2, 0)
        with pytest.raises(ValueError):
            compute_ck_table(tri, 2, 2, 5)


class TestPreservation:
    def test_listed_examples(self):
        assert verify_preservation(generate(lookup("jacobi-stirling-2", z=0), 10),
                                   SeedSequence.named("motzkin-numbers", 10), 10,
                                   "numeric-log-convex").passed
        assert verify_preservation(generate(lookup("jacobi-stirling-1", z=1), 10),
                                   SeedSequence.named("catalan-numbers", 10), 10,
                                   "numeric-log-convex").passed
        r = verify_preservation(generate(lookup("motzkin"), 3), SeedSequence.named("example51", 3),
                                3, "strong-q")
        assert not r.passed
        assert (r.witness["output"]["n"], r.witness["output"]["m"]) == (2, 2)

    def test_input_fail(self):
        seed = SeedSequence.explicit([1, 3, 2, 5, 9])
        r = verify_preservation(generate(lookup("pascal"), 4), seed, 4, "numeric-log-convex")
        assert r.verdict == INPUT_FAIL

    def test_numeric_mode_containment(self):
        for seed in ("constant-one", "catalan-numbers", "bell-numbers"):
            tri = generate(lookup("stirling2"), 9)
            s = SeedSequence.named(seed, 9)
            if verify_preservation(tri, s, 9, "strong-q").passed:
                assert verify_preservation(tri, s, 9, "numeric-log-convex").passed


class TestStability:
    def test_eulerian_differences(self):
        d = iterated_differences(stability_chain("eulerianA", 4), 4)
        assert d[2] == parse_poly("2*q^3")
        assert d[3] == parse_poly("4*q^3 + 4*q^4 + 4*q^5")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            stability_chain("nope", 5)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_lah(self, m):
        assert verify_stability_family("lah-associated", n_max=9, m=m).passed
        # every difference has a factor q, so strict stability cannot hold
        r = verify_stability_family("lah-associated", n_max=9, m=m, strict=True)
        assert not r.passed

    @given(a2=st.integers(0, 3), a3=st.integers(0, 3), b2=st.integers(-2, 0),
           b0=st.integers(0, 2), b3=st.integers(1, 4), a0=st.integers(0, 2))
    def test_sign_split_instances(self, a0, a2, a3, b0, b2, b3):
        # a2 >= 0 >= b2 on nonnegative arrays whose row degrees grow by one
        spec = affine(a0=a0, a2=a2, a3=a3, b0=b0, b2=b2, b3=b3)
        tri = generate(spec, 9)
        assume(all(x >= 0 for n in range(10) for x in tri.row(n)))
        ch = row_gf_chain(tri, 9)
        polys = list(ch.polys)
        assume(all(p.degree == n for n, p in enumerate(polys)))
        assert is_generalized_sturm_sequence(polys).passed
        assert verify_chain_stability(ch, 9).passed


class TestCampaign:
    def test_order_and_summary(self):
        entries = [
            {"builtin": "stirling2", "seed": "monomials", "n_max": 6},
            {"builtin": "motzkin", "seed": "example51", "n_max": 3},
            {"builtin": "jacobi-stirling-2", "z": 1, "seed": "catalan-numbers",
             "mode": "numeric-log-convex", "n_max": 8},
        ]
        res = run_campaign(entries)
        assert [r.triangle for r in res] == ["jacobi-stirling-2(z=1)", "motzkin", "stirling2"]
        csv = campaign_summary_csv(res)
        assert csv.splitlines()[0] == "triangle,seed,mode,n_max,verdict"
        assert "motzkin,example51,strong-q,3,FAIL" in csv
        assert run_campaign(list(reversed(entries))) == res

    def test_reports_are_exact_json(self):
        res = run_campaign([{"builtin": "motzkin", "seed": "example51", "n_max": 3}])
        text = res[0].report.to_json()
        assert json.loads(text)["schema"] == 1
        assert "." not in text.replace('"', "")


def test_corpus_names():
    assert set(SEED_CORPUS) == {"monomials", "constant-one", "example51", "motzkin-numbers",
                                "catalan-numbers", "bell-numbers"}
