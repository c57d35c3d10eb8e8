"""Compiled vs pure-Python mod-p kernels.

    python3 benchmarks/bench_kernels.py [--degree 200] [--repeat 5]
"""
import argparse
import random
import timeit

from aode._ext import _zmod_py

try:
    from aode._ext import _zmod
except ImportError:
    _zmod = None

P = 2_147_483_629


def _cases(rng, degree):
    a = [rng.randrange(P) for _ in range(degree + 1)]
    b = [rng.randrange(P) for _ in range(degree // 2 + 1)]
    f = [rng.randrange(P) for _ in range(degree // 4)] + [1]
    return a, b, f


def _workloads(mod, a, b, f):
    return {
        "mul": lambda: mod.zp_mul(a, b, P),
        "divmod": lambda: mod.zp_divmod(a, b, P),
        "gcd": lambda: mod.zp_gcd(a, b, P),
        "powmod": lambda: mod.zp_powmod(b[: len(f) - 1] or [1], 10 ** 6 + 3, f, P),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    a, b, f = _cases(random.Random(args.seed), args.degree)
    py = _workloads(_zmod_py, a, b, f)
    cy = _workloads(_zmod, a, b, f) if _zmod else None
    print(f"degree {args.degree}, p = {P}, best of {args.repeat}")
    print(f"{'kernel':<8} {'python [ms]':>12} {'cython [ms]':>12} {'speedup':>8}")
    for name, fn in py.items():
        tp = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
        if cy is None:
            print(f"{name:<8} {tp:12.3f} {'n/a':>12} {'':>8}")
            continue
        assert cy[name]() == fn(), f"backends disagree on {name}"
        tc = min(timeit.repeat(cy[name], number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<8} {tp:12.3f} {tc:12.3f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
