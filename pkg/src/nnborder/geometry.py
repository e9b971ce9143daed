"""Point sets, distance predicates and the sphere inversion transform."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

import numpy as np

from .errors import CoincidentPoints, DimensionMismatch, DuplicateConflict, EmptySet

EPS = 1e-9
MAX_DIM = 16


def as_point(p) -> np.ndarray:
    a = np.asarray(p, dtype=float)
    if a.ndim != 1:
        raise DimensionMismatch(f"expected a 1-d coordinate vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("coordinates must be finite")
    return a


def squared_distance(a, b) -> float:
    a, b = as_point(a), as_point(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimension {a.shape[0]} != {b.shape[0]}")
    diff = a - b
    return float(diff @ diff)


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class LabeledPointSet:
    """A training set: ``n`` distinct points in R^d, each carrying a class label.

    Labels are opaque hashable tokens. ``codes[i]`` is the position of point
    ``i``'s label in ``classes`` (first-appearance order), which is what the
    vectorized code paths compare.
    """

    points: np.ndarray
    labels: tuple
    classes: tuple
    codes: np.ndarray
    class_index: Mapping[Hashable, tuple[int, ...]] = field(repr=False)

    @classmethod
    def from_arrays(cls, points, labels: Sequence[Hashable], *, dedup: bool = True) -> "LabeledPointSet":
        """Validate and build a point set.

        Exact duplicates with the same label are dropped (first occurrence kept)
        when ``dedup`` is true; duplicates with different labels always raise
        :class:`DuplicateConflict`.
        """
        labels = list(labels)
        if len(labels) == 0:
            raise EmptySet("a labeled point set needs at least one point")
        X = np.array(points, dtype=float)
        if X.ndim != 2 or X.shape[0] != len(labels):
            raise DimensionMismatch(
                f"points must be an (n, d) array matching {len(labels)} labels, got shape {X.shape}"
            )
        d = X.shape[1]
        if not 1 <= d <= MAX_DIM:
            raise DimensionMismatch(f"dimension must be in [1, {MAX_DIM}], got {d}")
        if not np.all(np.isfinite(X)):
            raise ValueError("coordinates must be finite")

        _, first, inverse = np.unique(X, axis=0, return_index=True, return_inverse=True)
        inverse = inverse.reshape(-1)
        if len(first) < len(X):
            keep = []
            for i, g in enumerate(inverse):
                j = first[g]
                if j == i:
                    keep.append(i)
                elif labels[j] != labels[i]:
                    raise DuplicateConflict(
                        f"points {j} and {i} share coordinates {X[i].tolist()} "
                        f"but have labels {labels[j]!r} and {labels[i]!r}"
                    )
                elif not dedup:
                    raise CoincidentPoints(f"points {j} and {i} are duplicates")
            X = X[keep]
            labels = [labels[i] for i in keep]

        classes: dict = {}
        codes = np.empty(len(labels), dtype=np.int64)
        members: dict = {}
        for i, lab in enumerate(labels):
            c = classes.setdefault(lab, len(classes))
            codes[i] = c
            members.setdefault(lab, []).append(i)
        return cls(
            points=_frozen(X),
            labels=tuple(labels),
            classes=tuple(classes),
            codes=_frozen(codes),
            class_index={k: tuple(v) for k, v in members.items()},
        )

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.n

    def subset(self, indices) -> "LabeledPointSet":
        idx = [int(i) for i in indices]
        return LabeledPointSet.from_arrays(self.points[idx], [self.labels[i] for i in idx])

    def scale(self) -> float:
        """Largest absolute coordinate, floored at 1; used to scale tolerances."""
        return max(1.0, float(np.abs(self.points).max()))

    def diameter(self) -> float:
        """Diagonal of the bounding box (a cheap upper bound on the diameter)."""
        span = self.points.max(axis=0) - self.points.min(axis=0)
        return float(np.sqrt(span @ span))


def invert_around(p, q, radius: float = 1.0) -> np.ndarray:
    """Image of ``q`` under inversion in the sphere of the given radius about ``p``."""
    p, q = as_point(p), as_point(q)
    if p.shape != q.shape:
        raise DimensionMismatch(f"dimension {p.shape[0]} != {q.shape[0]}")
    if radius <= 0:
        raise ValueError("inversion radius must be positive")
    diff = q - p
    sq = float(diff @ diff)
    if sq <= (EPS * max(1.0, float(np.abs(p).max()))) ** 2:
        raise CoincidentPoints(f"cannot invert {q.tolist()} around itself")
    return p + diff * (radius * radius / sq)


@dataclass(frozen=True)
class InvertedSet:
    """Opposite-class points of a set inverted around one of its members.

    ``inv_points[m]`` is the image of original point ``origin_of[m]``. The
    center itself is a member of the set (``includes_center``) but is not
    stored in ``inv_points``.
    """

    center_index: int
    center: np.ndarray
    radius: float
    inv_points: np.ndarray
    origin_of: np.ndarray
    includes_center: bool = True

    def with_center(self) -> np.ndarray:
        """All members as an array, the center in row 0."""
        return np.vstack([self.center[None, :], self.inv_points])


def build_inverted_set(P: LabeledPointSet, p_index: int, radius: float = 1.0) -> InvertedSet:
    if not 0 <= p_index < P.n:
        raise IndexError(f"point index {p_index} out of range for n={P.n}")
    if radius <= 0:
        raise ValueError("inversion radius must be positive")
    p = P.points[p_index]
    origin = np.flatnonzero(P.codes != P.codes[p_index])
    diff = P.points[origin] - p
    sq = np.einsum("ij,ij->i", diff, diff)
    if origin.size and sq.min() <= (EPS * P.scale()) ** 2:
        j = int(origin[sq.argmin()])
        raise CoincidentPoints(f"points {p_index} and {j} coincide but belong to different classes")
    inv = p + diff * (radius * radius / sq)[:, None]
    return InvertedSet(
        center_index=int(p_index),
        center=p,
        radius=float(radius),
        inv_points=_frozen(inv),
        origin_of=_frozen(origin),
    )
