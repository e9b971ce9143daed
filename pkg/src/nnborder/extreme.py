"""Output-sensitive extreme point (hull vertex) enumeration via LP separation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from . import lp
from .errors import DimensionMismatch
from .geometry import EPS


@dataclass(frozen=True)
class SeparationResult:
    separable: bool
    direction: Optional[np.ndarray]
    margin: float


def separate_from_hull(q, H, tolerance: float = EPS) -> SeparationResult:
    """Decide whether ``q`` lies strictly outside ``conv(H)``.

    Solves ``max t  s.t.  a.(q - h) >= t  for h in H,  |a_i| <= 1``. The
    optimum ``t*`` is the l1 distance from ``q`` to the hull, and ``q`` is
    reported separable iff ``t* > tolerance`` (an absolute threshold).
    """
    q = np.asarray(q, dtype=float)
    H = np.asarray(H, dtype=float)
    d = q.shape[0]
    if H.size == 0:
        e = np.zeros(d)
        e[0] = 1.0
        return SeparationResult(True, e, float("inf"))
    H = H.reshape(len(H), -1)
    if H.shape[1] != d:
        raise DimensionMismatch(f"dimension {d} != {H.shape[1]}")

    diff = q - H
    # t <= min_h |q-h|_1 whenever H is nonempty, so this cap never binds.
    cap = float(np.abs(diff).sum(axis=1).min()) + 1.0
    A = [[-v for v in row] + [1.0] for row in diff.tolist()]
    x = lp.solve([0.0] * d + [1.0], A, [0.0] * len(A), [-1.0] * d + [-cap], [1.0] * d + [cap])
    if x is None:  # pragma: no cover - a = 0, t = 0 is always feasible
        raise RuntimeError("separation LP reported infeasible")
    a = np.array(x[:d])
    # Recompute the margin from the direction instead of trusting the t slot.
    t = float((diff @ a).min())
    if t > tolerance:
        return SeparationResult(True, a, t)
    return SeparationResult(False, None, max(t, 0.0))


def _argmax_lex(S: np.ndarray, a: np.ndarray) -> int:
    vals = S @ a
    top = np.flatnonzero(vals == vals.max())
    if len(top) == 1:
        return int(top[0])
    # Exact ties: lexicographically largest coordinate tuple.
    cand = S[top]
    order = np.lexsort(cand.T[::-1])
    return int(top[order[-1]])


def _strict_interior(S: np.ndarray, H: list[int], cand: np.ndarray, tol: float) -> np.ndarray:
    """Mask of candidates lying inside conv(S[H]) by more than ``tol``."""
    d = S.shape[1]
    if len(H) <= d:
        return np.zeros(len(cand), dtype=bool)
    try:
        hull = ConvexHull(S[H])
    except (QhullError, ValueError):
        return np.zeros(len(cand), dtype=bool)
    eq = hull.equations
    side = S[cand] @ eq[:, :d].T + eq[:, d]
    return side.max(axis=1) < -tol


def extreme_points_counted(
    S, tolerance: float = EPS, *, prefilter: bool = True
) -> tuple[frozenset[int], int]:
    """Indices of the hull vertices of ``S`` plus the number of LPs solved.

    Clarkson's scheme: keep a set ``H`` of confirmed vertices, test each
    candidate against ``conv(H)``; a separating direction ``a`` exposes a new
    vertex ``argmax_s a.s`` which joins ``H`` before the candidate is tested
    again. Each LP either discards a candidate or adds a vertex, so at most
    ``|S| + h`` LPs are solved.

    With ``prefilter`` set, every time ``H`` grows the remaining candidates
    that sit strictly inside ``conv(H)`` are dropped in one vectorized pass
    (these would be rejected by the LP anyway). The result is identical.
    """
    S = np.asarray(S, dtype=float)
    if S.ndim != 2:
        raise DimensionMismatch(f"expected an (n, d) array, got shape {S.shape}")
    m = len(S)
    if m == 0:
        return frozenset(), 0
    tol = tolerance * (float(np.abs(S).max()) or 1.0)

    H: list[int] = []
    in_H = np.zeros(m, dtype=bool)
    cand = np.arange(m)
    lp_calls = 0
    pos = 0
    while pos < len(cand):
        q = int(cand[pos])
        pos += 1
        if in_H[q]:
            continue
        grew = False
        while True:
            res = separate_from_hull(S[q], S[H], tol)
            lp_calls += 1
            if not res.separable:
                break
            v = _argmax_lex(S, res.direction)
            if in_H[v]:  # only reachable through rounding trouble
                break
            H.append(v)
            in_H[v] = True
            grew = True
            if v == q:
                break
        if grew and prefilter and pos < len(cand):
            rest = cand[pos:]
            inside = _strict_interior(S, H, rest, tol)
            cand = rest[~inside]
            pos = 0
    return frozenset(H), lp_calls


def extreme_points(S, tolerance: float = EPS, *, prefilter: bool = True) -> frozenset[int]:
    """Indices of the strict hull vertices of ``S``.

    ``tolerance`` is relative: it is scaled by the largest absolute
    coordinate in ``S``. Points on the hull boundary that are not vertices
    are not reported.
    """
    return extreme_points_counted(S, tolerance, prefilter=prefilter)[0]
