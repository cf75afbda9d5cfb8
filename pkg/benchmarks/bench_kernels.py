"""Compare the numba and numpy kernels on the workloads the test suite runs.

    python benchmarks/bench_kernels.py [--n-max 3000] [--repeat 3]
"""
import argparse
import time

import numpy as np

from foursquares import _kernels as K


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def workloads(n_max):
    table = K.square_table(16 * n_max)
    rng = np.random.default_rng(0)
    ts = rng.integers(10**5, 10**7, 200)

    def scan(impl):
        return lambda: impl(3, 10, 0, n_max, table).tolist()

    def witness(impl):
        return lambda: [tuple(impl(1, 24, n, table)) for n in range(15 * n_max, 16 * n_max, 7)]

    def ternary(impl):
        return lambda: [tuple(impl(577, int(t))) for t in ts]

    return [
        ("scan (3,10)", scan(K._scan_failures_jit), scan(K._scan_failures_np)),
        ("first witness (1,24)", witness(K._first_witness_jit), witness(K._first_witness_np)),
        ("ternary <1,577,577>", ternary(K._ternary_first_jit), ternary(K._ternary_first_np)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=3000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'kernel':<24}{'numba s':>10}{'numpy s':>10}{'speedup':>10}")
    for name, jit_fn, np_fn in workloads(args.n_max):
        jit_fn()  # compile outside the timing
        t_jit, r_jit = best_of(jit_fn, args.repeat)
        t_np, r_np = best_of(np_fn, args.repeat)
        assert r_jit == r_np, f"{name}: backends disagree"
        print(f"{name:<24}{t_jit:>10.4f}{t_np:>10.4f}{t_np / t_jit:>9.1f}x")


if __name__ == "__main__":
    main()
