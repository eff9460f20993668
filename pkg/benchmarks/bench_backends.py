#!/usr/bin/env python3
"""Compare the compiled kernel against the pure-Python fallback.

Times the Tarjan kernel on static graphs of increasing size, then an
end-to-end learned-structure run under each backend. Backend selection for
the end-to-end runs happens in subprocesses via INCSCC_PURE_PYTHON, since
the choice is made at import time.

Usage: python benchmarks/bench_backends.py [--full]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def time_kernel(fn, n, src, dst, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(n, src, dst)
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_comparison(sizes):
    from incscc import _kernels_py
    from incscc.synth import dense_fixture

    try:
        from incscc import _kernels
    except ImportError:
        _kernels = None
        print("compiled kernels not built; showing pure Python only")

    print(f"{'m':>9} {'n':>8} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for m, n in sizes:
        nn, seq = dense_fixture(m, n, seed=1)
        t_py = time_kernel(_kernels_py.tarjan_labels, nn, seq.src, seq.dst)
        if _kernels is not None:
            t_c = time_kernel(_kernels.tarjan_labels, nn, seq.src, seq.dst)
            print(f"{m:>9} {nn:>8} {t_py*1e3:>9.2f}ms {t_c*1e3:>9.2f}ms "
                  f"{t_py/t_c:>7.1f}x")
        else:
            print(f"{m:>9} {nn:>8} {t_py*1e3:>9.2f}ms {'-':>10} {'-':>8}")


_E2E_SNIPPET = """
import time
from incscc._backend import BACKEND
from incscc.synth import synthetic_stream
from incscc.learned import LearnedIncScc

n, sigma = synthetic_stream({m}, seed=42)
t0 = time.perf_counter()
algo = LearnedIncScc(n, sigma)
for e in sigma:
    algo.insert(e)
dt = time.perf_counter() - t0
print(f"{{BACKEND}} backend: {{dt*1e3:.0f}} ms for {{sigma.m}} inserts "
      f"(work_edges={{algo.stats()['work_edges']}})")
"""


def end_to_end(m):
    print(f"\nend-to-end learned run, perfect prediction, m={m}:")
    sys.stdout.flush()
    for force_py in ("0", "1"):
        env = dict(os.environ, INCSCC_PURE_PYTHON=force_py)
        subprocess.run([sys.executable, "-c", _E2E_SNIPPET.format(m=m)],
                       env=env, check=True)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true",
                        help="larger sizes (takes a few minutes)")
    args = parser.parse_args()
    sizes = [(10_000, 3000), (100_000, 30_000)]
    e2e_m = 100_000
    if args.full:
        sizes.append((1_000_000, 200_000))
        e2e_m = 300_000
    print("static Tarjan kernel:")
    kernel_comparison(sizes)
    end_to_end(e2e_m)


if __name__ == "__main__":
    main()
