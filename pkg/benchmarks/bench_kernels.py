"""Compare the compiled and pure-Python kernels on representative workloads.

    python3 benchmarks/bench_kernels.py --repeat 5
"""
from __future__ import annotations

import argparse
import json
import time

import numpy as np

from hopfcoh import _backend
from hopfcoh import cohomology as co
from hopfcoh.fixtures import BUILDERS


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def workloads(seed=0):
    rng = np.random.default_rng(seed)
    k, rows, p = 12, 6, 3
    const = rng.integers(0, p, rows)
    lin = rng.integers(0, p, (k, rows))
    quad = rng.integers(0, p, (k, k, rows))
    square = rng.integers(0, 7, (60, 80))
    a, b = rng.integers(0, 1 << 20, (120, 120)), rng.integers(0, 1 << 20, (120, 120))
    gl_basis = np.eye(9, dtype=np.int64).reshape(9, 3, 3)
    return {
        "quadratic_zeros k=12 p=3": lambda kr: kr.quadratic_zeros(const, lin, quad, p),
        "rref 60x80 p=7": lambda kr: kr.rref_mod(square, 7),
        "matmul 120^3 p=2^31-1": lambda kr: kr.matmul_mod(a, b, 2147483647),
        "invertible 3x3 p=3": lambda kr: kr.invertible_combinations(gl_basis, 3),
    }


def end_to_end(kr):
    co.kernels = kr
    mod = BUILDERS["f9_over_f3"]().module("M2")
    co.h1(mod)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print machine-readable results")
    args = ap.parse_args(argv)

    backends = _backend.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is available")
    rows = []
    for name, fn in workloads().items():
        row = {"workload": name}
        for bname, kr in sorted(backends.items()):
            row[bname] = _best(lambda: fn(kr), args.repeat)
        rows.append(row)
    row = {"workload": "H1 of F9/F3 on S^2 (end to end)"}
    original = co.kernels
    for bname, kr in sorted(backends.items()):
        row[bname] = _best(lambda: end_to_end(kr), args.repeat)
    co.kernels = original
    rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=1))
        return 0
    names = sorted(backends)
    print(f"{'workload':40s}" + "".join(f"{n:>12s}" for n in names) + ("   speedup" if len(names) > 1 else ""))
    for row in rows:
        line = f"{row['workload']:40s}" + "".join(f"{row[n]:11.4f}s" for n in names)
        if len(names) > 1:
            line += f"   {row['python'] / row['cython']:7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
