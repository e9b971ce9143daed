"""Brute-force ground truth for border points.

Everything here is deliberately independent of the inversion/extreme-point
pipeline: Delaunay adjacency is decided directly from the empty-ball
condition as a linear program over candidate ball centers, solved with
HiGHS through :func:`scipy.optimize.linprog`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, NamedTuple, Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import DimensionMismatch, EmptySet
from .geometry import EPS, LabeledPointSet


@dataclass(frozen=True)
class Certificate:
    """An empty ball with the bichromatic pair ``(i, j)`` on its surface."""

    i: int
    j: int
    center: np.ndarray
    radius: float

    def to_record(self) -> dict:
        return {"i": self.i, "j": self.j, "center": self.center.tolist(), "radius": self.radius}


def _coords(S) -> np.ndarray:
    X = S.points if isinstance(S, LabeledPointSet) else np.asarray(S, dtype=float)
    if X.ndim != 2:
        raise DimensionMismatch(f"expected an (n, d) array, got shape {X.shape}")
    return X


def _diameter(X: np.ndarray) -> float:
    span = X.max(axis=0) - X.min(axis=0)
    return max(float(np.sqrt(span @ span)), 1e-300)


def is_delaunay_neighbor(
    S, i: int, j: int, *, among: Optional[Sequence[int]] = None, tolerance: float = EPS
) -> Optional[Certificate]:
    """Return an empty-ball certificate for ``(i, j)``, or None.

    Competing sites are all of ``S`` or, if given, the indices in ``among``
    (``i`` and ``j`` are always included). The LP maximizes the smallest
    normalized clearance of the competitors from the ball center, so a
    returned center is as far from being blocked as possible; the pair is
    accepted when that clearance is at least ``-tolerance * diameter``.
    """
    X = _coords(S)
    if i == j:
        raise ValueError("a point is not its own neighbor")
    idx = range(len(X)) if among is None else sorted(set(int(s) for s in among) | {i, j})
    others = [s for s in idx if s != i and s != j]
    pi = X[i]
    Y = X[others] - pi
    yj = X[j] - pi
    yj2 = float(yj @ yj)
    diam = _diameter(X[list(idx)])
    d = X.shape[1]

    if not others:
        x = 0.5 * yj
    else:
        norms = np.sqrt(np.einsum("ij,ij->i", Y, Y))
        # 2 (y_s/|y_s|).x + tau <= |y_s|; maximize tau (clearance, in length units)
        A_ub = np.hstack([2.0 * Y / norms[:, None], np.ones((len(Y), 1))])
        A_eq = np.append(2.0 * yj, 0.0)[None, :]
        c = np.zeros(d + 1)
        c[-1] = -1.0
        res = linprog(
            c,
            A_ub=A_ub,
            b_ub=norms,
            A_eq=A_eq,
            b_eq=[yj2],
            bounds=[(None, None)] * d + [(None, diam)],
            method="highs",
        )
        if res.status != 0:
            return None
        if -res.fun < -tolerance * diam:
            return None
        x = res.x[:d]
        # land exactly on the bisector
        x = x + ((0.5 * yj2 - float(yj @ x)) / yj2) * yj
    center = pi + x
    return Certificate(int(i), int(j), center, float(np.sqrt(x @ x)))


def delaunay_neighbors(P: LabeledPointSet, p_index: int, among: Sequence[int]) -> frozenset[int]:
    """Indices in ``among`` that are Delaunay neighbors of ``p_index`` within ``among + {p}``."""
    return frozenset(
        int(q) for q in among if q != p_index and is_delaunay_neighbor(P, p_index, q, among=among) is not None
    )


def opposite_class_neighbors(P: LabeledPointSet, p_index: int) -> frozenset[int]:
    """Delaunay neighbors of ``p`` with respect to the other classes plus ``p`` itself."""
    among = np.flatnonzero(P.codes != P.codes[p_index]).tolist()
    return delaunay_neighbors(P, p_index, among)


class BruteForceBorder(NamedTuple):
    indices: frozenset[int]
    certificates: dict[int, Certificate]
    lp_tests: int


def brute_force_border(P: LabeledPointSet, tolerance: float = EPS) -> BruteForceBorder:
    """Border set by testing bichromatic pairs one LP at a time.

    Pairs whose endpoints are both already certified are skipped since they
    cannot change the union.
    """
    certs: dict[int, Certificate] = {}
    lp_tests = 0
    for i, j in combinations(range(P.n), 2):
        if P.codes[i] == P.codes[j] or (i in certs and j in certs):
            continue
        lp_tests += 1
        c = is_delaunay_neighbor(P, i, j, tolerance=tolerance)
        if c is not None:
            certs.setdefault(i, c)
            certs.setdefault(j, c)
    return BruteForceBorder(frozenset(certs), dict(sorted(certs.items())), lp_tests)


def verify_certificate(P: LabeledPointSet, c: Certificate, tolerance: float = EPS) -> bool:
    """Re-check the empty-ball condition of a certificate against ``P``."""
    if not (0 <= c.i < P.n and 0 <= c.j < P.n) or c.i == c.j:
        return False
    if P.labels[c.i] == P.labels[c.j]:
        return False
    center = np.asarray(c.center, dtype=float)
    if center.shape != (P.dim,) or not np.all(np.isfinite(center)):
        return False
    dist = np.sqrt(((P.points - center) ** 2).sum(axis=1))
    # relative slack plus a floor for rounding in the distance evaluation itself
    slack = tolerance * c.radius + 8 * np.finfo(float).eps * (float(np.abs(center).max()) + c.radius)
    if abs(dist[c.i] - dist[c.j]) > slack or abs(dist[c.i] - c.radius) > slack:
        return False
    return bool(dist.min() >= c.radius - slack)


class Classification(NamedTuple):
    label: Hashable
    index: int
    distance: float
    other_class_distance: float

    @property
    def margin(self) -> float:
        return self.other_class_distance - self.distance


def nn_classify(P: LabeledPointSet, q) -> Classification:
    """Nearest-neighbor label of ``q`` (lowest index wins ties)."""
    if P.n == 0:  # pragma: no cover - LabeledPointSet refuses to be empty
        raise EmptySet("cannot classify against an empty set")
    q = np.asarray(q, dtype=float)
    if q.shape != (P.dim,):
        raise DimensionMismatch(f"query has shape {q.shape}, expected ({P.dim},)")
    sq = ((P.points - q) ** 2).sum(axis=1)
    k = int(sq.argmin())
    other = P.codes != P.codes[k]
    runner = float(np.sqrt(sq[other].min())) if other.any() else float("inf")
    return Classification(P.labels[k], k, float(np.sqrt(sq[k])), runner)


def nn_classify_many(P: LabeledPointSet, Q, chunk: int = 1024) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized nearest-neighbor labels for many queries.

    Returns ``(codes, margins)``: the class code (index into ``P.classes``) of
    each query and the gap between its nearest point and the nearest point
    of any other class (``inf`` for single-class sets).
    """
    Q = np.asarray(Q, dtype=float)
    if Q.ndim != 2 or Q.shape[1] != P.dim:
        raise DimensionMismatch(f"queries have shape {Q.shape}, expected (m, {P.dim})")
    order = np.argsort(P.codes, kind="stable")
    X = P.points[order]
    codes_sorted = P.codes[order]
    starts = np.flatnonzero(np.r_[True, codes_sorted[1:] != codes_sorted[:-1]])
    present = codes_sorted[starts]
    x2 = np.einsum("ij,ij->i", X, X)

    out_codes = np.empty(len(Q), dtype=np.int64)
    margins = np.empty(len(Q))
    for lo in range(0, len(Q), chunk):
        B = Q[lo : lo + chunk]
        sq = np.einsum("ij,ij->i", B, B)[:, None] - 2.0 * B @ X.T + x2[None, :]
        np.maximum(sq, 0.0, out=sq)
        per_class = np.sqrt(np.minimum.reduceat(sq, starts, axis=1))
        best = per_class.argmin(axis=1)
        out_codes[lo : lo + chunk] = present[best]
        if per_class.shape[1] == 1:
            margins[lo : lo + chunk] = np.inf
        else:
            part = np.partition(per_class, 1, axis=1)
            margins[lo : lo + chunk] = part[:, 1] - part[:, 0]
    return out_codes, margins


def certify(P: LabeledPointSet, border: Sequence[int], tolerance: float = EPS) -> dict[int, Certificate]:
    """One verified certificate per reported border point.

    The partner of a border point is itself a border point of another class,
    so only those are tried, nearest first. Raises ``ValueError`` if some
    index admits no certificate (i.e. it is not a border point).
    """
    border = sorted(set(int(b) for b in border))
    out: dict[int, Certificate] = {}
    for b in border:
        partners = [j for j in border if P.codes[j] != P.codes[b]]
        partners.sort(key=lambda j: float(((P.points[j] - P.points[b]) ** 2).sum()))
        for j in partners:
            c = is_delaunay_neighbor(P, b, j, tolerance=tolerance)
            if c is not None and verify_certificate(P, c, tolerance):
                out[b] = c
                break
        else:
            raise ValueError(f"point {b} has no empty-ball certificate")
    return out
