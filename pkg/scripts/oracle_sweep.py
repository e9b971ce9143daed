"""Compare seeded search, MST baseline and brute force on random instances.

    python scripts/oracle_sweep.py --instances 100 --max-n 60
"""
import argparse
import time

import numpy as np

from nnborder import LabeledPointSet, brute_force_border, find_border_points, find_border_points_baseline

ap = argparse.ArgumentParser()
ap.add_argument("--instances", type=int, default=100)
ap.add_argument("--max-n", type=int, default=40)
ap.add_argument("--dims", default="2,3,4")
ap.add_argument("--rng", type=int, default=0)
args = ap.parse_args()

rng = np.random.default_rng(args.rng)
dims = [int(d) for d in args.dims.split(",")]
stats = {"agree": 0, "k_over_n": [], "calls_over_k": []}
t_seed = t_mst = t_brute = 0.0
for t in range(args.instances):
    d = dims[t % len(dims)]
    n = int(rng.integers(5, args.max_n + 1))
    c = int(rng.integers(2, 5))
    P = LabeledPointSet.from_arrays(rng.uniform(-1, 1, (n, d)), rng.integers(0, c, n).tolist())

    t0 = time.perf_counter()
    truth = brute_force_border(P).indices
    t_brute += time.perf_counter() - t0
    a = find_border_points(P, int(rng.integers(P.n)))
    b = find_border_points_baseline(P)
    t_seed += a.elapsed / 1e3
    t_mst += b.elapsed / 1e3
    stats["agree"] += a.as_set() == b.as_set() == truth
    stats["k_over_n"].append(a.k / P.n)
    if a.k:
        stats["calls_over_k"].append(a.inversion_calls / a.k)

print(f"instances agreeing with brute force: {stats['agree']}/{args.instances}")
print(f"mean k/n: {np.mean(stats['k_over_n']):.3f}   mean calls/k: {np.mean(stats['calls_over_k']):.3f}")
print(f"time  seeded {t_seed:.2f}s   mst {t_mst:.2f}s   brute {t_brute:.2f}s")
