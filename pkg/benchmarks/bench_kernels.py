"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from posicert import _kernels_py
from posicert.stability import hurwitz_matrix
from posicert.triangle import generate, lookup

try:
    from posicert import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    rng = random.Random(1)
    a = [rng.randint(-10**6, 10**6) for _ in range(200)]
    b = [rng.randint(-10**6, 10**6) for _ in range(200)]
    m = [[rng.randint(-99, 99) for _ in range(14)] for _ in range(14)]
    hz = hurwitz_matrix([rng.randint(1, 50) for _ in range(25)])
    tri = generate(lookup("eulerianB"), 30).matrix(30)
    tri = [[int(x) for x in r] for r in tri]
    cs = [rng.randint(-1000, 1000) for _ in range(40)]
    return {
        "poly_mul 200x200": lambda k: k.poly_mul(a, b),
        "bareiss_det 14x14": lambda k: k.bareiss_det(m),
        "leading_minors hurwitz 24": lambda k: k.leading_minors(hz),
        "2x2 minor scan eulerianB 31x31": lambda k: k.first_negative_2minor(tri),
        "homog_eval deg 39": lambda k: k.homog_eval(cs, 7, 13),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("pure", _kernels_py)] + ([("compiled", _ckernels)] if _ckernels else [])
    print(f"{'kernel':34s}" + "".join(f"{name:>12s}" for name, _ in backends) + "   speedup")
    for label, fn in workloads().items():
        times = []
        for _, mod in backends:
            n, _ = timeit.Timer(lambda: fn(mod)).autorange()
            best = min(timeit.repeat(lambda: fn(mod), number=n, repeat=args.repeat)) / n
            times.append(best)
        cells = "".join(f"{t * 1e6:10.1f}us" for t in times)
        speed = f"{times[0] / times[1]:8.2f}x" if len(times) == 2 else "       -"
        print(f"{label:34s}{cells}  {speed}")
    if _ckernels is None:
        print("compiled extension not built; only the pure backend was timed")


if __name__ == "__main__":
    main()
