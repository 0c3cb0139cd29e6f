#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernels against the NumPy fallback.

Kernel timings run both implementations in-process; the end-to-end number
(sample -> concurrence -> X construction -> EPU) is collected per backend
in a subprocess so the import-time backend selection applies.

Usage: python benchmarks/bench_backends.py [--pipeline-only N]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def make_inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        m = g @ g.conj().T
        out.append(m / np.trace(m).real)
    return out


def time_per_call(fn, inputs, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for m in inputs:
            fn(m)
        best = min(best, (time.perf_counter() - t0) / len(inputs))
    return best


def pipeline_seconds_per_state(n):
    from xepu import build_epu, concurrence_general, sample_random

    # warm-up
    build_epu(sample_random(4, 0))
    t0 = time.perf_counter()
    for i in range(n):
        rho = sample_random(4, i)
        concurrence_general(rho)
        build_epu(rho)
    return (time.perf_counter() - t0) / n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pipeline-only", type=int, default=None)
    ap.add_argument("-n", type=int, default=3000, help="kernel calls per timing")
    args = ap.parse_args()

    if args.pipeline_only is not None:
        print(f"{pipeline_seconds_per_state(args.pipeline_only):.9f}")
        return

    from xepu import _pykernels
    from xepu.linalg import _kernels

    inputs = make_inputs(args.n)
    rows = []
    if _kernels is not None:
        rows.append(("eigh4 (compiled)", time_per_call(_kernels.eigh4, inputs)))
    rows.append(("eigh4 (python)", time_per_call(_pykernels.eigh4, inputs)))
    if _kernels is not None:
        rows.append(
            ("psd_sqrt4 (compiled)", time_per_call(lambda m: _kernels.psd_sqrt4(m, 1e-10), inputs))
        )
    rows.append(
        ("psd_sqrt4 (python)", time_per_call(lambda m: _pykernels.psd_sqrt4(m, 1e-10), inputs))
    )

    n_pipe = 2000
    for backend in ("compiled", "python"):
        if backend == "compiled" and _kernels is None:
            continue
        env = dict(os.environ, XEPU_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, __file__, "--pipeline-only", str(n_pipe)],
            env=env, capture_output=True, text=True, check=True,
        )
        rows.append((f"sample+C+EPU ({backend})", float(out.stdout.strip())))

    width = max(len(name) for name, _ in rows)
    print(f"{'benchmark':<{width}}  per call")
    for name, sec in rows:
        print(f"{name:<{width}}  {sec * 1e6:8.2f} us")
    by_name = dict(rows)
    for kernel in ("eigh4", "psd_sqrt4", "sample+C+EPU"):
        c, p = f"{kernel} (compiled)", f"{kernel} (python)"
        if c in by_name and p in by_name:
            print(f"{kernel}: compiled is {by_name[p] / by_name[c]:.1f}x faster")


if __name__ == "__main__":
    main()
