import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

from nnborder import DimensionMismatch, extreme_points, separate_from_hull
from nnborder.extreme import extreme_points_counted

TRI = [[0, 0], [1, 0], [0, 1]]


def brute_extreme(S, tolerance=1e-9):
    """Test every point against the hull of all the others (n LPs)."""
    S = np.asarray(S, dtype=float)
    tol = tolerance * np.abs(S).max()
    return frozenset(i for i in range(len(S)) if separate_from_hull(S[i], np.delete(S, i, 0), tol).separable)


def l1_distance_to_hull(q, H):
    """min |q - sum(l_h h)|_1 over convex weights, via HiGHS (LP dual of the separation test)."""
    H = np.asarray(H, float)
    m, d = H.shape
    # variables: lambda (m), u (d) with -u <= q - H^T lambda <= u
    c = np.r_[np.zeros(m), np.ones(d)]
    A_ub = np.block([[-H.T, -np.eye(d)], [H.T, -np.eye(d)]])
    b_ub = np.r_[-q, q]
    A_eq = np.r_[np.ones(m), np.zeros(d)][None, :]
    res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[1.0], bounds=[(0, None)] * m + [(None, None)] * d)
    return res.fun


def test_separable_outside_triangle():
    res = separate_from_hull([2, 0], TRI)
    assert res.separable
    assert res.margin >= 1 - 1e-12
    a = res.direction
    assert np.all(a @ (np.array([2, 0]) - np.array(TRI)).T > 0)
    assert np.abs(a).max() <= 1 + 1e-12


def test_not_separable_inside_triangle():
    res = separate_from_hull([0.25, 0.25], TRI)
    assert not res.separable
    assert res.direction is None


def test_empty_hull_is_separable():
    res = separate_from_hull([0, 0], [])
    assert res.separable
    np.testing.assert_array_equal(res.direction, [1, 0])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        separate_from_hull([0, 0], [[1, 2, 3]])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(1, 25), st.integers(0, 2**32 - 1))
def test_margin_is_l1_distance(d, m, seed):
    rng = np.random.default_rng(seed)
    H = rng.normal(size=(m, d))
    q = rng.normal(size=d) * 2
    res = separate_from_hull(q, H, 1e-9)
    dist = l1_distance_to_hull(q, H)
    if res.separable:
        assert res.margin == pytest.approx(dist, rel=1e-6, abs=1e-9)
        assert np.all((q - H) @ res.direction >= res.margin - 1e-9)
    else:
        assert dist <= 1e-7


def test_square_with_center():
    assert extreme_points([[0, 0], [1, 0], [1, 1], [0, 1], [0.5, 0.5]]) == {0, 1, 2, 3}


def test_collinear_keeps_endpoints():
    assert extreme_points([[0, 0], [1, 0], [2, 0]]) == {0, 2}


def test_single_point_and_one_dimension():
    assert extreme_points([[3.0, 4.0]]) == {0}
    assert extreme_points([[3.0], [-1.0], [0.5], [2.0]]) == {0, 1}


def test_disc_sample_matches_per_point_oracle():
    rng = np.random.default_rng(20)
    r, t = np.sqrt(rng.uniform(size=20)), rng.uniform(0, 2 * np.pi, 20)
    S = np.c_[r * np.cos(t), r * np.sin(t)]
    assert extreme_points(S) == brute_extreme(S)


@pytest.mark.parametrize("prefilter", [True, False])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_random_sets_match_oracles(d, prefilter):
    rng = np.random.default_rng(100 + d)
    for _ in range(15):
        n = int(rng.integers(1, 51))
        S = rng.normal(size=(n, d))
        got, calls = extreme_points_counted(S, prefilter=prefilter)
        assert got == brute_extreme(S)
        if n > d + 1 and d > 1:
            assert got == frozenset(ConvexHull(S).vertices.tolist())
        # output sensitivity
        assert calls <= 4 * n * (len(got) + 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.integers(3, 40), st.integers(0, 2**32 - 1))
def test_soundness_and_permutation_invariance(d, n, seed):
    rng = np.random.default_rng(seed)
    S = rng.uniform(-5, 5, (n, d))
    got = extreme_points(S)
    tol = 1e-9 * np.abs(S).max()
    for i in got:
        res = separate_from_hull(S[i], np.delete(S, i, 0), tol)
        assert res.separable
        others = np.delete(S, i, 0)
        assert np.all(others @ res.direction <= S[i] @ res.direction - tol)
    perm = rng.permutation(n)
    got_perm = extreme_points(S[perm])
    assert {tuple(S[perm][i]) for i in got_perm} == {tuple(S[i]) for i in got}


def test_many_points_few_vertices_is_cheap():
    rng = np.random.default_rng(5)
    S = rng.normal(size=(20000, 2))
    got, calls = extreme_points_counted(S)
    assert got == frozenset(ConvexHull(S).vertices.tolist())
    assert calls <= 4 * (len(got) + 1) ** 2
