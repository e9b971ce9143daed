import numpy as np
import pytest

from nnborder import GenSpec, InvalidSpec, brute_force_border, find_border_points, generate


@pytest.mark.parametrize("kind", ["blobs", "annuli", "grid", "fixed_k_family"])
@pytest.mark.parametrize("dim", [1, 2, 3])
def test_deterministic_and_distinct(kind, dim):
    spec = GenSpec(kind, 60, dim, 2, rng_seed=9)
    a, b = generate(spec), generate(spec)
    assert a.points.tobytes() == b.points.tobytes()
    assert a.labels == b.labels
    assert a.n == 60 and a.dim == dim
    assert len(np.unique(a.points, axis=0)) == 60
    assert len(a.classes) == 2


def test_blobs_one_point_per_class():
    P = generate(GenSpec("blobs", 3, 2, 3, rng_seed=7))
    assert P.n == 3 and len(set(P.labels)) == 3


@pytest.mark.parametrize("kind", ["blobs", "annuli", "grid"])
def test_every_class_present(kind):
    P = generate(GenSpec(kind, 5, 2, 4, rng_seed=1))
    assert len(P.classes) == 4


def test_different_seeds_differ():
    a = generate(GenSpec("blobs", 20, 2, 2, rng_seed=1))
    b = generate(GenSpec("blobs", 20, 2, 2, rng_seed=2))
    assert not np.array_equal(a.points, b.points)


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec("spiral", 10),
        GenSpec("blobs", 2, 2, 3),
        GenSpec("blobs", 10, 0, 2),
        GenSpec("blobs", 10, 2, 0),
        GenSpec("fixed_k_family", 10, 2, 3),
        GenSpec("fixed_k_family", 10, 2, 2, separation=5),
        GenSpec("blobs", 10, 2, 2, centers=((0, 0),)),
    ],
)
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpec):
        generate(spec)


def test_fixed_k_family_border_size_stable():
    small = generate(GenSpec("fixed_k_family", 100, 2, 2, rng_seed=4))
    large = generate(GenSpec("fixed_k_family", 1000, 2, 2, rng_seed=4))
    k_small = len(brute_force_border(small).indices)
    k_large = find_border_points(large, 0).k
    assert k_small > 0 and k_large > 0
    assert max(k_small, k_large) <= 2 * min(k_small, k_large)
    assert k_large <= 0.1 * large.n


def test_explicit_centers():
    P = generate(GenSpec("blobs", 200, 2, 2, rng_seed=3, sigma=0.1, centers=((0, 0), (5, 5))))
    for lab, c in zip(P.classes, [(0, 0), (5, 5)]):
        idx = list(P.class_index[lab])
        np.testing.assert_allclose(P.points[idx].mean(axis=0), c, atol=0.05)
