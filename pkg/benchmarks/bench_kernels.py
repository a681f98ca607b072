"""Compiled vs pure-Python kernels on the scan hot loop (X^p mod f over F_p).

    python benchmarks/bench_kernels.py [--primes 20000] [--degree 7]
"""

import argparse
import random
import time

from splitlaw import _pykernels, arith, kernels


def bench(fn, cases) -> float:
    t0 = time.perf_counter()
    for f, p in cases:
        fn(f, p, p)
    return time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", type=int, default=20000, help="use primes below this bound")
    ap.add_argument("--degree", type=int, default=7)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    cases = []
    for p in arith.primes_below(args.primes):
        f = [rng.randrange(p) for _ in range(args.degree)] + [1]
        cases.append((f, p))

    # both backends must agree before timing means anything
    for f, p in cases[:: max(1, len(cases) // 200)]:
        assert _pykernels.powx_mod(f, p, p) == kernels.powx_mod(f, p, p)

    t_py = bench(_pykernels.powx_mod, cases)
    print(f"python  : {t_py:8.3f} s  ({len(cases)} powers, degree {args.degree})")
    if kernels.BACKEND != "cython":
        print("cython  : not built (pure Python fallback active)")
        return
    t_c = bench(kernels.powx_mod, cases)
    print(f"cython  : {t_c:8.3f} s")
    print(f"speedup : {t_py / t_c:8.1f}x")


if __name__ == "__main__":
    main()
