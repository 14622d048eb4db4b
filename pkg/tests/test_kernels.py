import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from posicert import _kernels_py, kernels

ints = st.integers(-50, 50)
square = st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(ints, min_size=n, max_size=n), min_size=n, max_size=n))

try:
    from posicert import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_kernels_py] + ([_ckernels] if _ckernels is not None else [])


def brute_det(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * brute_det([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(len(m)))


@pytest.mark.parametrize("k", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
class TestBackends:
    @given(square)
    def test_det(self, k, m):
        assert k.bareiss_det(m) == brute_det(m)

    @given(square)
    def test_leading_minors(self, k, m):
        got = k.leading_minors(m)
        want = [brute_det([r[:i] for r in m[:i]]) for i in range(1, len(m) + 1)]
        assert got == want[:len(got)]
        if len(got) < len(want):
            assert got[-1] == 0

    @given(st.lists(ints, max_size=8), st.lists(ints, max_size=8))
    def test_poly_mul(self, k, a, b):
        want = [0] * (len(a) + len(b) - 1) if a and b else []
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                want[i + j] += x * y
        assert k.poly_mul(a, b) == want

    @given(st.lists(ints, min_size=1, max_size=8), ints, st.integers(1, 20))
    def test_homog_eval(self, k, cs, p, q):
        n = len(cs) - 1
        assert k.homog_eval(cs, p, q) == sum(c * p ** i * q ** (n - i) for i, c in enumerate(cs))

    @given(st.lists(st.lists(st.integers(-3, 6), min_size=4, max_size=4), max_size=5))
    def test_first_negative_2minor(self, k, m):
        want = None
        for i1 in range(len(m)):
            for i2 in range(i1 + 1, len(m)):
                for j1 in range(4):
                    for j2 in range(j1 + 1, 4):
                        v = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]
                        if v < 0 and want is None:
                            want = (i1, i2, j1, j2, v)
        assert k.first_negative_2minor(m) == want


@pytest.mark.skipif(_ckernels is None or os.environ.get("POSICERT_PURE") == "1",
                    reason="compiled backend unavailable or disabled")
def test_compiled_backend_selected():
    assert kernels.BACKEND == "compiled"


def test_pure_override():
    env = dict(os.environ, POSICERT_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from posicert import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "pure"
