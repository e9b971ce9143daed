"""Border point search: the inversion method and the two worklist drivers.

``find_border_points`` starts from a single arbitrary seed point.
``find_border_points_baseline`` first seeds the worklist with the endpoints
of bichromatic edges of the Euclidean minimum spanning tree, which costs
O(n^2) before the search even begins.
"""
from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .errors import EmptySet
from .extreme import extreme_points_counted
from .geometry import EPS, LabeledPointSet, build_inverted_set

Algorithm = Literal["seeded", "mst_baseline"]


@dataclass(frozen=True)
class BorderResult:
    border_indices: tuple[int, ...]
    inversion_calls: int
    lp_tests: int
    elapsed: float  # milliseconds
    algorithm: Algorithm

    @property
    def k(self) -> int:
        return len(self.border_indices)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.border_indices)


@dataclass(frozen=True)
class EdgeList:
    edges: tuple[tuple[int, int], ...]
    weights: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.edges)


def _inversion(P: LabeledPointSet, p_index: int, tolerance: float, prefilter: bool) -> tuple[frozenset[int], int]:
    inv = build_inverted_set(P, p_index, radius=1.0)
    if inv.inv_points.shape[0] == 0:
        return frozenset(), 0
    # Translate so the center sits at the origin (row 0); vertex sets are
    # translation invariant and the tolerance scale becomes meaningful.
    S = inv.with_center() - inv.center
    verts, lp_tests = extreme_points_counted(S, tolerance, prefilter=prefilter)
    E = frozenset(int(inv.origin_of[v - 1]) for v in verts if v != 0)
    return E, lp_tests


def inversion_method(P: LabeledPointSet, p_index: int, tolerance: float = EPS) -> frozenset[int]:
    """Opposite-class points whose inverted images around ``p`` are hull vertices.

    These are exactly the Delaunay neighbors of ``p`` within the point set
    made of ``p`` and every point of a different class. ``p`` itself is never
    part of the result.
    """
    return _inversion(P, p_index, tolerance, prefilter=True)[0]


def _worklist(
    P: LabeledPointSet, start: Iterable[int], tolerance: float, prefilter: bool
) -> tuple[set[int], int, int]:
    queue = deque(start)
    visited = set(queue)
    found: set[int] = set()
    calls = lp_tests = 0
    while queue:
        p = queue.popleft()
        E, tests = _inversion(P, p, tolerance, prefilter)
        calls += 1
        lp_tests += tests
        found |= E
        for q in sorted(E):
            if q not in visited:
                visited.add(q)
                queue.append(q)
    return found, calls, lp_tests


def find_border_points(
    P: LabeledPointSet, seed_index: int = 0, *, tolerance: float = EPS, prefilter: bool = True
) -> BorderResult:
    """All border points of ``P``, searched outward from one seed point.

    The seed need not be a border point; it only ends up in the result if
    some other point's inversion reports it.
    """
    if P.n == 0:  # pragma: no cover - LabeledPointSet refuses to be empty
        raise EmptySet("empty point set")
    if not 0 <= seed_index < P.n:
        raise IndexError(f"seed index {seed_index} out of range for n={P.n}")
    t0 = time.perf_counter()
    found, calls, lp_tests = _worklist(P, [seed_index], tolerance, prefilter)
    elapsed = (time.perf_counter() - t0) * 1e3
    return BorderResult(tuple(sorted(found)), calls, lp_tests, elapsed, "seeded")


def euclidean_mst(P: LabeledPointSet) -> EdgeList:
    """Minimum spanning tree of the complete Euclidean graph (dense Prim, O(n^2)).

    On equal keys the lowest vertex index is attached first, and a vertex
    keeps its earlier (lower-index) parent unless a strictly shorter edge
    appears.
    """
    n = P.n
    if n == 0:  # pragma: no cover
        raise EmptySet("empty point set")
    X = P.points
    in_tree = np.zeros(n, dtype=bool)
    best = np.full(n, np.inf)
    parent = np.full(n, -1, dtype=np.int64)
    key = np.empty(n)
    cur = 0
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    for step in range(n):
        in_tree[cur] = True
        if step:
            i, j = sorted((int(parent[cur]), cur))
            edges.append((i, j))
            weights.append(float(best[cur]))
        diff = X - X[cur]
        dist = np.einsum("ij,ij->i", diff, diff)
        better = (dist < best) & ~in_tree
        best[better] = dist[better]
        parent[better] = cur
        np.copyto(key, best)
        key[in_tree] = np.inf
        cur = int(key.argmin())
    order = sorted(range(len(edges)), key=lambda e: edges[e])
    return EdgeList(tuple(edges[e] for e in order), tuple(weights[e] for e in order))


def mst_bichromatic_seed(P: LabeledPointSet) -> frozenset[int]:
    """Endpoints of minimum spanning tree edges joining different classes."""
    mst = euclidean_mst(P)
    out: set[int] = set()
    for i, j in mst.edges:
        if P.codes[i] != P.codes[j]:
            out.update((i, j))
    return frozenset(out)


def find_border_points_baseline(
    P: LabeledPointSet, *, tolerance: float = EPS, prefilter: bool = True
) -> BorderResult:
    """Border points via the MST-initialized worklist.

    The bichromatic MST endpoints are border points themselves, so they are
    reported directly and enqueued before the search starts.
    """
    if P.n == 0:  # pragma: no cover
        raise EmptySet("empty point set")
    t0 = time.perf_counter()
    if len(P.classes) < 2:
        return BorderResult((), 0, 0, (time.perf_counter() - t0) * 1e3, "mst_baseline")
    seeds = sorted(mst_bichromatic_seed(P))
    found, calls, lp_tests = _worklist(P, seeds, tolerance, prefilter)
    found.update(seeds)
    elapsed = (time.perf_counter() - t0) * 1e3
    return BorderResult(tuple(sorted(found)), calls, lp_tests, elapsed, "mst_baseline")
