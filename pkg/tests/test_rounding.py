import math

import numpy as np
import pytest

import ratiocut as rc
from ratiocut.errors import DisconnectedGraphWarning, InputError


def complete_graph(n, weight=1.0):
    return rc.WeightedGraph(weight * (1.0 - np.eye(n)))


def two_disjoint_pairs():
    w = np.zeros((4, 4))
    w[0, 1] = w[1, 0] = 1.0
    w[2, 3] = w[3, 2] = 1.0
    return rc.WeightedGraph(w)


# ---------------------------------------------------------------- bisection


def test_fiedler_bisect_k2_edge():
    g = complete_graph(2)
    out = rc.fiedler_bisect(g)
    assert out.objective == pytest.approx(2.0, abs=1e-9)  # cut 1, sizes 1 and 1
    assert out.partition.k == 2


def test_fiedler_bisect_disjoint_pairs():
    with pytest.warns(DisconnectedGraphWarning):
        out = rc.fiedler_bisect(two_disjoint_pairs())
    assert out.objective == pytest.approx(0.0, abs=1e-9)


def test_fiedler_bisect_example_blocks():
    g, p = rc.gen_example_blocks(1, 0.5)
    out = rc.fiedler_bisect(g)
    assert rc.same_partition(out.partition, p)
    assert out.objective == pytest.approx(1.0, abs=1e-9)
    assert out.iterations == g.n - 1


def test_fiedler_bisect_no_prefix_split_is_better():
    """Exhaustiveness: recompute every prefix split by brute force."""
    rng = np.random.default_rng(6)
    w = np.triu(rng.uniform(0.1, 1, (9, 9)) * (rng.random((9, 9)) < 0.7), 1)
    g = rc.WeightedGraph(w + w.T)
    if not rc.is_connected(g):
        pytest.skip("random draw came out disconnected")
    out = rc.fiedler_bisect(g)
    order = np.argsort(rc.fiedler(g), kind="stable")
    for t in range(1, g.n):
        labels = np.zeros(g.n, dtype=int)
        labels[order[t:]] = 1
        split = rc.Partition(labels, 2)
        assert out.objective <= rc.ratio_cut(g, split) + 1e-9


def test_fiedler_bisect_needs_two_vertices():
    with pytest.raises(InputError):
        rc.fiedler_bisect(rc.WeightedGraph(np.zeros((1, 1))))


# ------------------------------------------------------------------ k-means


def test_kmeans_exact_grouping_at_k_locations():
    rng = np.random.default_rng(12)
    centers = np.array([[0.0, 0.0], [5.0, 0.0], [0.0, 5.0]])
    labels_true = rng.integers(0, 3, 30)
    labels_true[:3] = [0, 1, 2]
    points = centers[labels_true]
    out = rc.kmeans_round(points, 3, seed=0, restarts=3)
    assert out.objective == pytest.approx(0.0, abs=1e-12)
    assert rc.same_partition(out.partition, rc.Partition(labels_true, 3))


def test_kmeans_on_indicator_rows():
    p = rc.Partition(np.array([0, 0, 1, 1]), 2)
    out = rc.kmeans_round(rc.canonical_uiso(p), 2, seed=0)
    assert out.objective == pytest.approx(0.0, abs=1e-12)
    assert rc.same_partition(out.partition, p)


def test_kmeans_recovers_planted_from_eigenmap():
    g, p = rc.gen_planted_blocks([20, 30, 50], 1.0, 0.05)
    emb = rc.eigenmap(g, 3)
    out = rc.kmeans_round(emb.U, 3, seed=0)
    assert rc.same_partition(out.partition, p)


def test_kmeans_deterministic():
    rng = np.random.default_rng(77)
    points = rng.normal(size=(40, 3))
    a = rc.kmeans_round(points, 4, seed=9, restarts=5)
    b = rc.kmeans_round(points, 4, seed=9, restarts=5)
    assert np.array_equal(a.partition.labels, b.partition.labels)
    assert a.objective == b.objective
    assert a.restarts_used == 5


def test_kmeans_identical_points_still_valid():
    # degenerate input: every cluster must still be nonempty
    points = np.zeros((5, 2))
    out = rc.kmeans_round(points, 2, seed=0, restarts=2)
    assert out.partition.k == 2
    assert out.partition.sizes().min() >= 1
    assert out.objective == pytest.approx(0.0, abs=1e-12)


def test_kmeans_validation():
    points = np.zeros((3, 2))
    with pytest.raises(InputError):
        rc.kmeans_round(points, 4)
    with pytest.raises(InputError):
        rc.kmeans_round(points, 2, restarts=0)
    with pytest.raises(InputError):
        rc.kmeans_round(np.zeros(3), 1)


def test_kmeans_objective_matches_definition():
    rng = np.random.default_rng(31)
    points = rng.normal(size=(25, 2))
    out = rc.kmeans_round(points, 3, seed=2)
    cost = 0.0
    for j in range(3):
        members = points[out.partition.labels == j]
        cost += float(((members - members.mean(axis=0)) ** 2).sum())
    assert out.objective == pytest.approx(cost, abs=1e-9)


# ------------------------------------------------------------ orchestration


def test_spectral_cluster_disjoint_pairs_both_methods():
    g = two_disjoint_pairs()
    planted = rc.Partition(np.array([0, 0, 1, 1]), 2)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DisconnectedGraphWarning)
        a = rc.spectral_cluster(g, 2, method="fiedler")
        b = rc.spectral_cluster(g, 2, method="kmeans", seed=0)
    assert rc.same_partition(a.partition, planted)
    assert rc.ratio_cut(g, b.partition) == pytest.approx(0.0, abs=1e-9)


def test_spectral_cluster_matches_oracle_on_example():
    g, p = rc.gen_example_blocks(2, 0.5)
    out = rc.spectral_cluster(g, 2, method="fiedler")
    best = rc.min_ratio_cut_bruteforce(g, 2)
    assert rc.same_partition(out.partition, best.best)
    assert rc.same_partition(out.partition, p)


def test_spectral_cluster_unbalanced(unbalanced):
    g, p = unbalanced
    out = rc.spectral_cluster(g, 3, method="kmeans", seed=0)
    assert rc.same_partition(out.partition, p)


def test_spectral_cluster_validation():
    g = complete_graph(4)
    with pytest.raises(InputError):
        rc.spectral_cluster(g, 3, method="fiedler")
    with pytest.raises(InputError):
        rc.spectral_cluster(g, 2, method="ward")


def test_strict_certificates_round_to_the_optimum():
    # wherever the certificate is strict and n is small, rounding, the
    # oracle, and the planted labels must all coincide
    cases = [
        rc.gen_example_blocks(1, 0.5),
        rc.gen_example_blocks(1, 0.9),
        rc.gen_planted_blocks([3, 3], 1.0, 0.1),
        rc.gen_planted_blocks([4, 4, 4], 1.0, 0.2),
        rc.gen_planted_blocks([3, 4, 5], 1.0, 0.15),
    ]
    for g, p in cases:
        assert rc.certificate(g, p).strict
        method = "fiedler" if p.k == 2 else "kmeans"
        rounded = rc.spectral_cluster(g, p.k, method=method, seed=0)
        exact = rc.min_ratio_cut_bruteforce(g, p.k)
        assert exact.unique
        assert rc.same_partition(rounded.partition, exact.best)
        assert rc.same_partition(rounded.partition, p)


# ---------------------------------------------------------------- proximity


def test_proximity_two_singletons():
    points = np.array([[0.0], [2.0]])
    p = rc.Partition(np.array([0, 1]), 2)
    rep = rc.proximity_check(points, p)
    assert rep.holds
    assert rep.xi[0, 1] == pytest.approx(1.0)
    assert rep.rhs[0, 1] == pytest.approx(0.0)
    assert rep.separated[0, 1]


def test_proximity_overlap_fails():
    points = np.array([[0.0], [1.0], [0.9], [2.0]])
    p = rc.Partition(np.array([0, 0, 1, 1]), 2)
    rep = rc.proximity_check(points, p)
    assert not rep.separated[0, 1]
    assert not rep.holds


def test_proximity_planted_embedding_holds():
    g, p = rc.gen_planted_blocks([10, 10], 1.0, 0.01)
    emb = rc.eigenmap(g, 2)
    rep = rc.proximity_check(emb.U, p)
    assert rep.holds


def test_proximity_degenerate_centroids_flagged():
    points = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 0.0], [1.0, 1.0]])
    p = rc.Partition(np.array([0, 0, 1, 1]), 2)
    rep = rc.proximity_check(points, p)
    assert (0, 1) in rep.degenerate_pairs
    assert not rep.holds


def test_proximity_spread_norms_ordered():
    rng = np.random.default_rng(41)
    points = rng.normal(size=(30, 4))
    labels = np.concatenate([np.arange(3), rng.integers(0, 3, 27)])
    p = rc.Partition(labels, 3)
    rep = rc.proximity_check(points, p)
    assert rep.spectral_sq_sum <= rep.frobenius_sq_sum + 1e-12


def test_proximity_validation():
    with pytest.raises(InputError):
        rc.proximity_check(np.zeros((3, 2)), rc.Partition(np.array([0, 1]), 2))


# ------------------------------------------------------------------- margin


def test_margin_zero_radius_exact():
    c1, c2 = np.array([0.0, 0.0]), np.array([4.0, 0.0])
    margin, bound = rc.hyperplane_margin_bound(c1, c2, 0.0, c1, c2)
    assert margin == pytest.approx(2.0)
    assert bound == pytest.approx(2.0)


def test_margin_large_radius_trivial_bound():
    c1, c2 = np.array([0.0]), np.array([1.0])
    x, y = np.array([0.1]), np.array([0.9])
    margin, bound = rc.hyperplane_margin_bound(c1, c2, 0.5, x, y)
    assert bound <= 0.0
    assert margin >= bound - 1e-9


def test_margin_random_property():
    rng = np.random.default_rng(61)
    for _ in range(200):
        d = int(rng.integers(1, 5))
        c1 = rng.normal(size=d)
        c2 = rng.normal(size=d)
        radius = float(rng.uniform(0, 1))
        x = c1 + radius * rng.uniform(0, 1) * _unit(rng, d)
        y = c2 + radius * rng.uniform(0, 1) * _unit(rng, d)
        if np.linalg.norm(x - y) < 1e-9:
            continue
        margin, bound = rc.hyperplane_margin_bound(c1, c2, radius, x, y)
        assert margin >= bound - 1e-9


def _unit(rng, d):
    v = rng.normal(size=d)
    return v / np.linalg.norm(v)


def test_margin_validation():
    c = np.array([0.0, 0.0])
    far = np.array([9.0, 9.0])
    with pytest.raises(InputError):
        rc.hyperplane_margin_bound(c, c + 1.0, 0.1, far, c + 1.0)
    with pytest.raises(InputError):
        rc.hyperplane_margin_bound(c, c + 1.0, 2.0, c, c)  # x == y


def test_recovery_diagnostics():
    out = rc.recovery_diagnostics(0.05, 100)
    assert out["threshold_bisector"] == pytest.approx(0.1)
    assert out["threshold_proximity"] == pytest.approx(0.02)
    assert out["below_bisector"] and not out["below_proximity"]
    with pytest.raises(InputError):
        rc.recovery_diagnostics(0.1, 0)
