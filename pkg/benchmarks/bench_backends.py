"""Benchmark the hot kernels: numba backend vs pure-numpy fallback.

Runs every vectorized kernel on representative workloads (the array shapes
the quadrature engine actually feeds them), checks the two backends agree
pointwise, and reports per-call timings and speedups.

    python3 benchmarks/bench_backends.py [--size N] [--repeats K]
"""

import argparse
import time

import numpy as np

from ngwp import _kernels_numpy
from ngwp import backends


def _workloads(size):
    rng = np.random.default_rng(12345)
    x = rng.uniform(0.02, 6.0, size)
    z_real = rng.uniform(0.01, 30.0, size)
    ray = np.exp(-0.25j * np.pi)
    z_ray = z_real * ray
    u = rng.uniform(0.01, 8.0, size)
    return [
        ("eta3_batch", lambda mod: mod.eta3_batch(x)),
        ("sech_batch", lambda mod: mod.sech_batch(z_ray)),
        ("glaisher_batch", lambda mod: mod.glaisher_batch(1.0, z_ray)),
        ("thm21_factor", lambda mod: mod.thm21_factor(z_ray, 1.0, 1.0)),
        ("thm31_factor", lambda mod: mod.thm31_factor(z_ray, 0.5 + 0.0j, 1.5)),
        ("wsector_integrand",
         lambda mod: mod.wsector_integrand(u, 0.5 + 0.0j, 1.0, 0.2)),
        ("phi2_batch", lambda mod: mod.phi2_batch(z_ray, ray * 1.3, 1.0)),
    ]


def _best_time(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=200_000,
                    help="array length per kernel call (default 200000)")
    ap.add_argument("--repeats", type=int, default=5,
                    help="timing repeats, best-of (default 5)")
    args = ap.parse_args()

    try:
        numba_mod = backends._load_numba_kernels()
    except ImportError:
        raise SystemExit("numba backend unavailable; nothing to compare")

    works = _workloads(args.size)

    print("warming up the numba backend (jit compile)...")
    t0 = time.perf_counter()
    for _, call in _workloads(8):
        call(numba_mod)
    print("  compile+first-call: %.1f s" % (time.perf_counter() - t0))

    print("\n%-20s %12s %12s %9s  %s" %
          ("kernel", "numpy [ms]", "numba [ms]", "speedup", "max |diff|"))
    for name, call in works:
        ref = np.asarray(call(_kernels_numpy))
        out = np.asarray(call(numba_mod))
        dmax = float(np.max(np.abs(ref - out)))
        scale = float(np.max(np.abs(ref))) or 1.0
        assert np.allclose(ref, out, rtol=1e-12, atol=1e-13 * scale), \
            "backends disagree on %s (max |diff| %g)" % (name, dmax)
        t_np = _best_time(lambda: call(_kernels_numpy), args.repeats)
        t_nb = _best_time(lambda: call(numba_mod), args.repeats)
        print("%-20s %12.3f %12.3f %8.2fx  %.2e"
              % (name, t_np * 1e3, t_nb * 1e3, t_np / t_nb, dmax))


if __name__ == "__main__":
    main()
