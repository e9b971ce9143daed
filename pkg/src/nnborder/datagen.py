"""Deterministic synthetic labeled point sets.

All randomness comes from numpy's ``PCG64`` bit generator (PCG-XSL-RR
128/64) seeded with ``GenSpec.rng_seed``, so a spec always produces the same
coordinates on any platform with the same numpy major version. Labels are
the strings ``"c0"``, ``"c1"``, ... so that sets survive a CSV round trip.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from .errors import InvalidSpec
from .geometry import MAX_DIM, LabeledPointSet

Kind = Literal["blobs", "annuli", "grid", "fixed_k_family"]
KINDS = ("blobs", "annuli", "grid", "fixed_k_family")


@dataclass(frozen=True)
class GenSpec:
    kind: Kind
    n: int
    dim: int = 2
    classes: int = 2
    rng_seed: int = 0
    sigma: float = 1.0
    # blobs: explicit class centers (classes x dim); default draws them in a box
    centers: Optional[tuple[tuple[float, ...], ...]] = None
    center_box: float = 10.0
    # annuli: number of rings (default max(classes, 2)) and their spacing
    rings: Optional[int] = None
    ring_gap: float = 1.0
    ring_width: float = 0.1
    # fixed_k_family: blob center distance in units of sigma
    separation: float = 20.0

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if not 1 <= self.dim <= MAX_DIM:
            raise InvalidSpec(f"dim must be in [1, {MAX_DIM}]")
        if self.classes < 1 or self.n < self.classes:
            raise InvalidSpec("need n >= classes >= 1")
        if not self.sigma > 0:
            raise InvalidSpec("sigma must be positive")
        if self.kind == "fixed_k_family":
            if self.classes != 2:
                raise InvalidSpec("fixed_k_family has exactly two classes")
            if self.separation < 20.0:
                raise InvalidSpec("fixed_k_family needs separation >= 20 sigma")
        if self.centers is not None and np.shape(self.centers) != (self.classes, self.dim):
            raise InvalidSpec("centers must have shape (classes, dim)")


def _round_robin(n: int, classes: int) -> np.ndarray:
    return np.arange(n) % classes


def _unit_directions(rng: np.random.Generator, n: int, d: int) -> np.ndarray:
    g = rng.standard_normal((n, d))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def _blobs(spec: GenSpec, rng: np.random.Generator, n: int):
    if spec.centers is not None:
        centers = np.asarray(spec.centers, dtype=float)
    else:
        centers = rng.uniform(-spec.center_box, spec.center_box, (spec.classes, spec.dim))
    lab = _round_robin(n, spec.classes)
    return centers[lab] + spec.sigma * rng.standard_normal((n, spec.dim)), lab


def _annuli(spec: GenSpec, rng: np.random.Generator, n: int):
    rings = spec.rings or max(spec.classes, 2)
    ring = np.arange(n) % rings
    radius = (ring + 1) * spec.ring_gap + spec.ring_width * rng.standard_normal(n)
    X = _unit_directions(rng, n, spec.dim) * radius[:, None]
    return X, ring % spec.classes


def _grid(spec: GenSpec, rng: np.random.Generator, n: int):
    side = max(2, math.ceil(n ** (1.0 / spec.dim)))
    pick = np.sort(rng.choice(side**spec.dim, size=n, replace=False))
    idx = np.stack(np.unravel_index(pick, (side,) * spec.dim), axis=1)
    lab = idx.sum(axis=1) % spec.classes
    if len(np.unique(lab)) < spec.classes:
        lab[: spec.classes] = np.arange(spec.classes)
    # jitter keeps the lattice out of cocircular degeneracy
    X = spec.sigma * (idx + rng.uniform(-0.2, 0.2, idx.shape))
    return X, lab


def _fixed_k(spec: GenSpec, rng: np.random.Generator, n: int):
    lab = _round_robin(n, 2)
    X = spec.sigma * rng.standard_normal((n, spec.dim))
    X[lab == 1, 0] += spec.separation * spec.sigma
    return X, lab


_DRAW = {"blobs": _blobs, "annuli": _annuli, "grid": _grid, "fixed_k_family": _fixed_k}


def generate(spec: GenSpec) -> LabeledPointSet:
    spec.validate()
    rng = np.random.Generator(np.random.PCG64(spec.rng_seed))
    X, lab = _DRAW[spec.kind](spec, rng, spec.n)
    # Redraw any exact coordinate collisions (probability ~0 for these kinds).
    for _ in range(100):
        _, first = np.unique(X, axis=0, return_index=True)
        if len(first) == len(X):
            break
        dup = np.setdiff1d(np.arange(len(X)), first)
        Xn, _ = _DRAW[spec.kind](spec, rng, spec.n)
        X[dup] = Xn[dup]
    else:  # pragma: no cover
        raise InvalidSpec("could not generate distinct points")
    return LabeledPointSet.from_arrays(X, [f"c{int(c)}" for c in lab])
