"""Compare the jit and reference kernel backends on realistic workloads.

Usage: python3 benchmarks/bench_kernels.py [--repeats R]

Spawns one child process per backend (the backend is fixed at import time
by CORRWALK_BACKEND), times each kernel best-of-R, and prints a table.
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

WORKLOADS = [
    ("log_f_table(n=2000)", lambda k: k.log_f_table(2000, 0.7)),
    ("evolve_pmf(n=2000)", lambda k: k.evolve_pmf(2000, 0.3, 0.8, 0.4)),
    ("path_product_sums(n=18)", lambda k: k.path_product_sums(18, 0.3, 0.8)),
    ("walk_final_positions(1000x20000)",
     lambda k: k.walk_final_positions(0.3, 0.8, 0.4, 1000, 20000, np.uint64(1))),
    ("absorb_final_positions(N=12, 20000 paths)",
     lambda k: k.absorb_final_positions(0.3, 0.8, 0.4, 12, 6, 5000, 20000, np.uint64(1))),
]


def run_child(repeats):
    from corrwalk import _kernels as kernels

    timings = {}
    for name, fn in WORKLOADS:
        fn(kernels)  # warmup, absorbs jit compilation
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn(kernels)
            best = min(best, time.perf_counter() - t0)
        timings[name] = best * 1e3
    print(json.dumps({"backend": kernels.BACKEND, "timings": timings}))


def time_backend(backend, repeats):
    env = dict(os.environ, CORRWALK_BACKEND=backend)
    cmd = [sys.executable, __file__, "--child", "--repeats", str(repeats)]
    proc = subprocess.run(cmd, capture_output=True, text=True, env=env)
    if proc.returncode != 0:
        return None
    return json.loads(proc.stdout)["timings"]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        run_child(args.repeats)
        return

    results = {b: time_backend(b, args.repeats) for b in ("numpy", "numba")}
    width = max(len(name) for name, _ in WORKLOADS)
    print(f"{'kernel':<{width}}  {'numpy (ms)':>12}  {'numba (ms)':>12}  {'speedup':>8}")
    for name, _ in WORKLOADS:
        cells = []
        for backend in ("numpy", "numba"):
            t = results[backend] and results[backend].get(name)
            cells.append(f"{t:12.3f}" if t is not None else f"{'n/a':>12}")
        if all(results[b] for b in ("numpy", "numba")):
            ratio = results["numpy"][name] / results["numba"][name]
            cells.append(f"{ratio:7.1f}x")
        else:
            cells.append(f"{'n/a':>8}")
        print(f"{name:<{width}}  {cells[0]}  {cells[1]}  {cells[2]}")


if __name__ == "__main__":
    main()
