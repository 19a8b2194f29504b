#!/usr/bin/env python3
"""Benchmark the numba kernels against their numpy fallbacks.

The two paths compute identical results (asserted here); this script
reports how much the @njit loops buy on the oracle's hot kernels, plus an
end-to-end number for one full code enumeration.

Usage: python benchmarks/bench_kernels.py [--n 4095] [--q 2] [--repeats 3]
Set BCHFORMS_NO_NUMBA=1 to see the whole suite run on the fallback path.
"""

import argparse
import time

import numpy as np

from bchforms import kernels
from bchforms.cyclotomic import code_params
from bchforms.gfarith import small_field
from bchforms.oracle import trace_route_weights


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_coset_kernel(q: int, n: int, repeats: int) -> None:
    F = small_field(q)
    rng = np.random.default_rng(0)
    qv = rng.integers(0, q, n).astype(np.int64)
    trv = rng.integers(0, q, n).astype(np.int64)
    trv2 = np.concatenate([trv, trv])
    pair = F.add.astype(np.int64).ravel()
    neg = F.neg.astype(np.int64)

    c_np = np.zeros(n + 1, dtype=np.int64)
    t_np = time_call(lambda: kernels._coset_weight_counts_np(qv, trv2, pair, neg, c_np), repeats)
    print(f"coset_weight_counts  numpy : n={n} q={q}  {t_np*1e3:9.2f} ms")

    if kernels.use_numba():
        c_nb = np.zeros(n + 1, dtype=np.int64)
        kernels._coset_weight_counts_nb(qv, trv2, pair, neg, c_nb)  # compile
        t_nb = time_call(lambda: kernels._coset_weight_counts_nb(qv, trv2, pair, neg, c_nb), repeats)
        print(f"coset_weight_counts  numba : n={n} q={q}  {t_nb*1e3:9.2f} ms  ({t_np/t_nb:5.1f}x)")
        one_np = np.zeros(n + 1, dtype=np.int64)
        one_nb = np.zeros(n + 1, dtype=np.int64)
        kernels._coset_weight_counts_np(qv, trv2, pair, neg, one_np)
        kernels._coset_weight_counts_nb(qv, trv2, pair, neg, one_nb)
        assert np.array_equal(one_np, one_nb), "kernel paths disagree"


def bench_eval_qvec(q: int, n: int, repeats: int) -> None:
    F = small_field(q)
    rng = np.random.default_rng(1)
    n_slots = 3
    rows = rng.integers(0, q, (n_slots, n)).astype(np.int64)
    steps = np.array([3, 9, 17], dtype=np.int64) % max(n, 1)
    lam_logs = np.array([2, n // 2, n - 3], dtype=np.int64)
    pair = F.add.astype(np.int64).ravel()
    out = np.zeros(n, dtype=np.int64)
    t_np = time_call(lambda: kernels._eval_qvec_np(lam_logs, steps, rows, q, out), repeats)
    print(f"eval_qvec            numpy : n={n} q={q}  {t_np*1e3:9.3f} ms")
    if kernels.use_numba():
        out_nb = np.zeros(n, dtype=np.int64)
        kernels._eval_qvec_nb(lam_logs, steps, rows, pair, q, out_nb)  # compile
        t_nb = time_call(lambda: kernels._eval_qvec_nb(lam_logs, steps, rows, pair, q, out_nb), repeats)
        print(f"eval_qvec            numba : n={n} q={q}  {t_nb*1e3:9.3f} ms  ({t_np/t_nb:5.1f}x)")
        assert np.array_equal(out, out_nb), "kernel paths disagree"


def bench_end_to_end(repeats: int) -> None:
    params = code_params(2, 6, 3)
    t = time_call(lambda: trace_route_weights(params, workers=1), repeats)
    path = "numba" if kernels.use_numba() else "numpy"
    print(f"trace_route (2,6,3)  {path:>5} : 2^16 words           {t*1e3:9.2f} ms")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4095)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    print(f"numba available: {kernels.use_numba()}")
    bench_coset_kernel(args.q, args.n, args.repeats)
    bench_eval_qvec(args.q, args.n, args.repeats)
    bench_end_to_end(args.repeats)


if __name__ == "__main__":
    main()
