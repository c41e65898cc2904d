"""Timing of the numba kernels against their pure-Python/numpy fallbacks.

    python benchmarks/bench_kernels.py --n 4000 --repeat 5
"""
import argparse
import time

import numpy as np

from prasym import _accel, families as fam, kernels
from prasym.families import family


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4000, help="recurrence degree")
    ap.add_argument("--m", type=int, default=300, help="Jacobi matrix size for the bisection")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not _accel.NUMBA_ENABLED:
        raise SystemExit("numba is disabled (PRASYM_DISABLE_NUMBA); nothing to compare")

    f = family("bv")
    a, b, _ = fam.coeff_arrays(f, args.n)
    xs = np.linspace(10.0, 1e12, 16)
    off = np.sqrt(b)
    d, e = fam.build_jacobi(f, args.m)
    e2 = e * e
    hi = float(np.max(np.abs(d)) + 2 * np.max(e)) * 1.01

    cases = [
        ("monic recurrence x16", lambda: [kernels.monic_scaled(x, a, b, args.n) for x in xs],
         lambda: [kernels.monic_scaled.py_func(x, a, b, args.n) for x in xs]),
        ("orthonormal complex", lambda: kernels.orthonormal_complex(1j, a, off, args.n),
         lambda: kernels.orthonormal_complex.py_func(1j, a, off, args.n)),
        (f"Sturm bisection m={args.m}", lambda: kernels._bisect_jit(d, e2, -1.0, hi, 1e-13, 0.0, 1e-300, 200),
         lambda: kernels._bisect_numpy(d, e2, -1.0, hi, 1e-13, 0.0, 1e-300, 200)),
    ]
    print(f"{'kernel':28s} {'numba [ms]':>12s} {'fallback [ms]':>14s} {'speed-up':>9s}")
    for name, fast, slow in cases:
        fast()  # compile outside the timing
        tf, ts = best_of(fast, args.repeat), best_of(slow, args.repeat)
        print(f"{name:28s} {1e3 * tf:12.3f} {1e3 * ts:14.3f} {ts / tf:9.1f}")


if __name__ == "__main__":
    main()
