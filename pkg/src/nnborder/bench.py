"""Runtime scaling measurements for the seeded and MST-initialized searches."""
from __future__ import annotations

import csv
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .datagen import GenSpec, generate
from .search import BorderResult, find_border_points, find_border_points_baseline

DEFAULT_NS = (1000, 2000, 4000, 8000, 16000, 32000)
FIELDS = ("algorithm", "n", "k", "inversion_calls", "lp_tests", "elapsed_ms", "seed_is_border")


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    n: int
    k: int
    inversion_calls: int
    lp_tests: int
    elapsed_ms: float
    seed_is_border: bool


def loglog_slope(ns: Sequence[float], times: Sequence[float]) -> Optional[float]:
    """Least-squares slope of log(time) against log(n); None with fewer than two sizes."""
    if len(set(ns)) < 2:
        return None
    slope, _ = np.polyfit(np.log(ns), np.log(np.maximum(times, 1e-9)), 1)
    return float(slope)


def _row(res: BorderResult, n: int, seed: int) -> BenchRow:
    return BenchRow(
        res.algorithm, n, res.k, res.inversion_calls, res.lp_tests, round(res.elapsed, 3), seed in res.as_set()
    )


def run_bench(
    ns: Iterable[int] = DEFAULT_NS,
    *,
    kind: str = "fixed_k_family",
    dim: int = 2,
    classes: int = 2,
    rng_seed: int = 0,
    algorithms: Sequence[str] = ("seeded", "mst"),
    repeats: int = 1,
    progress=None,
) -> tuple[list[BenchRow], dict[str, Optional[float]]]:
    """Measure each algorithm on one generated set per size, sequentially.

    With ``repeats > 1`` the fastest run is kept. Both algorithms must agree
    on the border set; a mismatch raises ``AssertionError``.
    """
    rows: list[BenchRow] = []
    for n in ns:
        P = generate(GenSpec(kind, n, dim, classes, rng_seed))
        found = {}
        for algo in algorithms:
            best: Optional[BorderResult] = None
            for _ in range(max(1, repeats)):
                res = find_border_points(P, 0) if algo == "seeded" else find_border_points_baseline(P)
                if best is None or res.elapsed < best.elapsed:
                    best = res
            found[algo] = best.as_set()
            rows.append(_row(best, n, 0))
            if progress:
                progress(rows[-1])
        if len(set(found.values())) > 1:
            raise AssertionError(f"algorithms disagree at n={n}")
    slopes = {}
    for algo in algorithms:
        mine = [r for r in rows if r.algorithm == ("seeded" if algo == "seeded" else "mst_baseline")]
        slopes[algo] = loglog_slope([r.n for r in mine], [r.elapsed_ms for r in mine])
    return rows, slopes


def write_bench_csv(rows: Sequence[BenchRow], fh) -> None:
    w = csv.DictWriter(fh, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(asdict(r))
