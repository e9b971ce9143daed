"""Seidel's randomized incremental linear programming for small dimension.

Solves ``max c.x  s.t.  A x <= b,  lo <= x <= hi`` with the box making every
subproblem bounded. Expected running time is O(D! m) for m constraints in D
variables, i.e. linear in m for fixed D. Plain Python floats are used
throughout; for the tiny systems solved here they beat numpy's per-call
overhead by a wide margin.
"""
from __future__ import annotations

import random
from functools import lru_cache
from typing import Optional, Sequence

Row = tuple[list[float], float]

_FEAS_TOL = 1e-12


def solve(
    c: Sequence[float],
    A: Sequence[Sequence[float]],
    b: Sequence[float],
    lo: Sequence[float],
    hi: Sequence[float],
    *,
    rng: Optional[random.Random] = None,
) -> Optional[list[float]]:
    """Return an optimal point, or None if the LP is infeasible.

    When the optimum is not unique any optimal point may be returned. The
    constraint order is shuffled with ``rng``; by default a fixed permutation
    per constraint count is used, so repeated calls are reproducible.
    """
    D = len(c)
    if len(lo) != D or len(hi) != D:
        raise ValueError("box bounds must match the objective length")
    rows: list[Row] = [([float(v) for v in a], float(bi)) for a, bi in zip(A, b)]
    for a, _ in rows:
        if len(a) != D:
            raise ValueError("constraint row length must match the objective length")
    if any(l > h for l, h in zip(lo, hi)):
        return None
    if rng is not None:
        rng.shuffle(rows)
    else:
        rows = [rows[i] for i in _permutation(len(rows))]
    return _seidel([float(v) for v in c], rows, [float(v) for v in lo], [float(v) for v in hi])


@lru_cache(maxsize=4096)
def _permutation(m: int) -> tuple[int, ...]:
    order = list(range(m))
    random.Random(0x5EED + m).shuffle(order)
    return tuple(order)


def _violated(a: list[float], b: float, x: list[float]) -> bool:
    s = 0.0
    mag = abs(b)
    for ai, xi in zip(a, x):
        t = ai * xi
        s += t
        mag += abs(t)
    return s > b + _FEAS_TOL * (1.0 + mag)


def _solve_1d(c: float, rows: list[Row], lo: float, hi: float) -> Optional[list[float]]:
    for (a,), b in rows:
        tol = _FEAS_TOL * (1.0 + abs(b))
        if a > 0.0:
            if b / a < hi:
                hi = b / a
        elif a < 0.0:
            if b / a > lo:
                lo = b / a
        elif b < -tol:
            return None
    if lo > hi:
        if lo - hi > _FEAS_TOL * (1.0 + abs(lo) + abs(hi)):
            return None
        return [0.5 * (lo + hi)]
    return [hi if c > 0.0 else lo]


def _seidel(c: list[float], rows: list[Row], lo: list[float], hi: list[float]) -> Optional[list[float]]:
    D = len(c)
    if D == 1:
        return _solve_1d(c[0], rows, lo[0], hi[0])

    x = [h if ci > 0.0 else l for ci, l, h in zip(c, lo, hi)]
    for i, (a, b) in enumerate(rows):
        if not _violated(a, b, x):
            continue
        # The optimum of the first i+1 constraints lies on a.x = b; eliminate
        # the variable with the largest coefficient and recurse.
        k = max(range(D), key=lambda j: abs(a[j]))
        ak = a[k]
        if ak == 0.0:
            return None
        ratio = [aj / ak for aj in a]
        bk = b / ak
        keep = [j for j in range(D) if j != k]

        sub_rows: list[Row] = [
            ([-ratio[j] for j in keep], hi[k] - bk),
            ([ratio[j] for j in keep], bk - lo[k]),
        ]
        for a2, b2 in rows[:i]:
            f = a2[k]
            if f == 0.0:
                sub_rows.append(([a2[j] for j in keep], b2))
            else:
                sub_rows.append(([a2[j] - f * ratio[j] for j in keep], b2 - f * bk))
        sub_c = [c[j] - c[k] * ratio[j] for j in keep]
        y = _seidel(sub_c, sub_rows, [lo[j] for j in keep], [hi[j] for j in keep])
        if y is None:
            return None
        xk = bk - sum(ratio[j] * yj for j, yj in zip(keep, y))
        x = y[:k] + [xk] + y[k:]
    return x
