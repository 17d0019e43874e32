"""Benchmark: compiled series kernels vs the pure-Python fallback.

Usage:  python benchmarks/bench_kernels.py
"""

import math
import time

from stablekit import kernels
from stablekit.engine import EvalMethod, pdf
from stablekit.params import RationalIndex, StableParams

PFQ_CASES = [
    ("2F2 levy tail", (1.0, 1.5), (1.0, 1.5), -5.0 + 0j),
    ("3F3 holtsmark", (1.0, 5.0 / 12, 11.0 / 12), (1.0 / 3, 0.5, 5.0 / 6), -2.0 + 0j),
    ("5F5 complex", (1.0, 0.7, 0.9, 1.1, 1.3), (0.4, 0.6, 0.8, 1.2, 1.4), 3.0 - 4.0j),
]

H_CASES = [
    ("h_small a=3/2", "h_small_sum", (1.5, 1.0, 2.0, 1e-12, 2000, 1)),
    ("h_small a=7/4 skew", "h_small_sum", (1.75, 0.8, 1.5, 1e-12, 2000, -1)),
    ("h_large a=1/2", "h_large_sum", (0.5, 1.0, 1.5, 1e-12, 2000, 1, 2, 1)),
    ("h_large a=2/5 skew", "h_large_sum", (0.4, 1.55, 2.0, 1e-12, 2000, 2, 5, -1)),
]


def _time(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def bench_kernels():
    backends = kernels.get_backends()
    if "compiled" not in backends:
        print("compiled backend not built; nothing to compare")
        return
    print(f"{'case':<24}{'python':>12}{'compiled':>12}{'speedup':>9}")
    for name, a, b, w in PFQ_CASES:
        times = {}
        for label, mod in backends.items():
            times[label] = _time(lambda m=mod: m.pfq_sum(a, b, w, 1e-13, 2000), 200)
        print(
            f"{name:<24}{times['python'] * 1e6:>10.1f}us"
            f"{times['compiled'] * 1e6:>10.1f}us"
            f"{times['python'] / times['compiled']:>8.1f}x"
        )
    for name, fn_name, args in H_CASES:
        times = {}
        for label, mod in backends.items():
            fn = getattr(mod, fn_name)
            times[label] = _time(lambda f=fn: f(*args), 200)
        print(
            f"{name:<24}{times['python'] * 1e6:>10.1f}us"
            f"{times['compiled'] * 1e6:>10.1f}us"
            f"{times['python'] / times['compiled']:>8.1f}x"
        )


def bench_end_to_end():
    import os

    print()
    print("end-to-end: 201-point density grids (auto dispatch)")
    grids = [
        ("gaussian-like a=7/4", StableParams(alpha=RationalIndex(7, 4), beta=0.3)),
        ("subdiffusive a=2/5", StableParams(alpha=RationalIndex(2, 5), beta=-0.5)),
    ]
    for name, params in grids:
        xs = [(-6.0 + 12.0 * k / 200) for k in range(201)]
        t0 = time.perf_counter()
        for x in xs:
            pdf(params, x, 1.0, method=EvalMethod.AUTO, tol=1e-9)
        dt = time.perf_counter() - t0
        print(f"  {name:<24}{dt * 1e3:>9.1f} ms  ({kernels.BACKEND} kernels)")


if __name__ == "__main__":
    print(f"active backend: {kernels.BACKEND}")
    bench_kernels()
    bench_end_to_end()
