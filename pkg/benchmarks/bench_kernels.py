"""Compare the compiled kernels with the pure-Python fallback.

Kernel timings call both implementations directly on the same inputs;
the end-to-end timing runs the product sweep in a fresh interpreter per
backend (``MONOCRYSTAL_PURE_PYTHON=1`` forces the fallback).

    python3 benchmarks/bench_kernels.py [--n-max 5] [--repeat 5]
"""
import argparse
import os
import subprocess
import sys
import timeit

from monocrystal import Convention, _purepy
from monocrystal.decomposition import fundamental_crystal

try:
    from monocrystal import _speedups
except ImportError:
    _speedups = None

SWEEP = """
import time
from monocrystal import BACKEND, verify_case
from monocrystal.decomposition import iter_cases
start = time.perf_counter()
for n in range(2, {n_max} + 1):
    for case in iter_cases(n, n + 2, n_min=n):
        assert verify_case(*case).match
print(BACKEND, time.perf_counter() - start)
"""


def kernel_inputs(n):
    conv = Convention(n)
    monomials = sorted(fundamental_crystal(n, (n + 1) // 2, 1), key=str)
    pairs = [(a.items, b.items) for a in monomials for b in monomials[:20]]
    products = [(a * b).items for a in monomials for b in monomials[:20]]
    return conv.templates, pairs, products


def bench_kernels(n, repeat):
    templates, pairs, products = kernel_inputs(n)
    cases = {
        "merge": lambda mod: [mod.merge(a, b) for a, b in pairs],
        "signatures": lambda mod: [mod.signatures(p, n) for p in products],
        "neighbors": lambda mod: [mod.neighbors(p, n, templates) for p in products],
    }
    backends = [("python", _purepy)] + ([("compiled", _speedups)] if _speedups else [])
    print(f"kernels, rank {n}, {len(products)} monomials per call (best of {repeat}):")
    for name, fn in cases.items():
        times = {b: min(timeit.repeat(lambda: fn(mod), number=1, repeat=repeat)) for b, mod in backends}
        row = "  ".join(f"{b}={t * 1e3:8.2f} ms" for b, t in times.items())
        ratio = f"  speedup x{times['python'] / times['compiled']:.1f}" if "compiled" in times else ""
        print(f"  {name:<11} {row}{ratio}")


def bench_sweep(n_max):
    print(f"end-to-end product sweep n=2..{n_max}:")
    for pure in ("1", "0"):
        env = dict(os.environ, MONOCRYSTAL_PURE_PYTHON=pure)
        proc = subprocess.run(
            [sys.executable, "-c", SWEEP.format(n_max=n_max)], env=env, capture_output=True, text=True, check=True
        )
        backend, seconds = proc.stdout.split()
        print(f"  {backend:<9} {float(seconds):7.2f} s")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _speedups is None:
        print("compiled extension not built; only the fallback is timed")
    bench_kernels(6, args.repeat)
    bench_sweep(args.n_max)


if __name__ == "__main__":
    main()
