"""Weight functions, threshold fitting, and filtration-graph construction."""

import itertools
import random

import pytest

from wlfiltration import (
    Filtration,
    LabeledGraph,
    WeightFunctionSpec,
    compute_weights,
    filtration_graph,
    filtration_sequence,
    fit_thresholds,
    fit_thresholds_auto,
    permute_graph,
    weight_degree,
    weight_triangles,
    weight_walks,
)

from conftest import k33_graph, path3, prism_graph, random_graph

K3 = LabeledGraph.build(3, [(0, 1), (1, 2), (2, 0)])
K4 = LabeledGraph.build(4, list(itertools.combinations(range(4), 2)))


def test_weight_degree_examples():
    assert weight_degree(path3()) == (2, 2)
    assert weight_degree(K3) == (2, 2, 2)
    star = LabeledGraph.build(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert weight_degree(star) == (4, 4, 4, 4)


def test_weight_walks_examples():
    assert weight_walks(K3, 2) == (2, 2, 2)
    g = path3()
    assert weight_walks(g, 2) == (1, 1)
    rng = random.Random(0)
    for _ in range(10):
        h = random_graph(rng, max_n=8)
        assert weight_walks(h, 1) == (1,) * h.edge_count


def _walks_bruteforce(g: LabeledGraph, walk_length: int):
    """Enumerate every walk of length 1..walk_length between edge endpoints."""
    def count(u, v, length):
        if length == 0:
            return 1 if u == v else 0
        return sum(count(w, v, length - 1) for w in g.adjacency[u])

    return tuple(
        sum(count(u, v, l) for l in range(1, walk_length + 1)) for u, v in g.edges
    )


def test_weight_walks_matches_bruteforce():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, max_n=6, p=0.5)
        for lam in range(1, 5):
            assert weight_walks(g, lam) == _walks_bruteforce(g, lam)


def test_weight_walks_overflow_names_lambda():
    g = LabeledGraph.build(6, list(itertools.combinations(range(6), 2)))
    with pytest.raises(OverflowError, match="walk_length=40"):
        weight_walks(g, 40)
    with pytest.raises(ValueError):
        weight_walks(g, 0)


def test_weight_triangles_witness_pair():
    prism, k33 = prism_graph(), k33_graph()
    by_edge = dict(zip(prism.edges, weight_triangles(prism)))
    triangle_edges = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    for edge, w in by_edge.items():
        assert w == (1 if edge in triangle_edges else 0)
    assert weight_triangles(k33) == (0,) * 9
    assert weight_triangles(K4) == (2,) * 6


def test_compute_weights_dispatch():
    g = path3(3.0, 4.0)
    assert compute_weights(g, WeightFunctionSpec("native")) == (3.0, 4.0)
    assert compute_weights(g, WeightFunctionSpec("degree")) == (2, 2)
    assert compute_weights(g, WeightFunctionSpec("triangles")) == (0, 0)
    assert compute_weights(g, WeightFunctionSpec("walks", walk_length=2)) == (1, 1)
    with pytest.raises(ValueError, match="unknown weight kind"):
        WeightFunctionSpec("betweenness")
    with pytest.raises(ValueError):
        WeightFunctionSpec("walks", walk_length=0)


def test_fit_thresholds_examples():
    assert fit_thresholds([1, 1, 1, 2, 2, 5], 2).thresholds == (5, 1)
    assert fit_thresholds([4.0, 7.5, 2.0, 2.0], 1).thresholds == (2.0,)
    with pytest.warns(UserWarning, match="reduced"):
        f = fit_thresholds([0, 1], 5)
    assert f.thresholds == (1, 0)
    with pytest.raises(ValueError):
        fit_thresholds([], 2)
    with pytest.raises(ValueError):
        fit_thresholds([1.0], 0)


def _kmeans_bruteforce(values, k):
    """All cost-optimal contiguous partitions, in exact rational arithmetic."""
    from fractions import Fraction

    values = sorted(set(values))
    d = len(values)
    k = min(k, d)

    def sse(chunk):
        mu = Fraction(sum(chunk), len(chunk))
        return sum((Fraction(x) - mu) ** 2 for x in chunk)

    best_cost, optima = None, []
    for splits in itertools.combinations(range(1, d), k - 1):
        bounds = [0, *splits, d]
        clusters = [values[bounds[i]:bounds[i + 1]] for i in range(k)]
        cost = sum(sse(c) for c in clusters)
        minima = tuple(sorted((c[0] for c in clusters), reverse=True))
        if best_cost is None or cost < best_cost:
            best_cost, optima = cost, [minima]
        elif cost == best_cost:
            optima.append(minima)
    return best_cost, optima


def _partition_cost(values, thresholds):
    """Exact SSE of the partition whose cluster minima are the thresholds."""
    from fractions import Fraction

    values = sorted(set(values))
    minima = sorted(thresholds)
    cost = Fraction(0)
    for i, lo in enumerate(minima):
        hi = minima[i + 1] if i + 1 < len(minima) else None
        chunk = [x for x in values if x >= lo and (hi is None or x < hi)]
        mu = Fraction(sum(chunk), len(chunk))
        cost += sum((Fraction(x) - mu) ** 2 for x in chunk)
    return cost


def test_fit_thresholds_matches_bruteforce():
    import warnings

    rng = random.Random(21)
    for _ in range(60):
        values = [rng.randint(0, 12) for _ in range(rng.randint(1, 14))]
        k = rng.randint(1, 6)
        best_cost, optima = _kmeans_bruteforce(values, k)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            got = fit_thresholds(values, k).thresholds
        assert _partition_cost(values, got) == best_cost, (sorted(values), k)
        if len(optima) == 1:
            assert got == optima[0], (sorted(values), k)


def test_fit_thresholds_tie_prefers_small_leading_cluster():
    # {0}|{1,2} and {0,1}|{2} cost the same; the smaller first cluster wins
    assert fit_thresholds([0, 1, 2], 2).thresholds == (1, 0)
    # three-way tie at cost 1/2: {0}{1}{2,3} wins over {0}{1,2}{3} and {0,1}{2}{3}
    assert fit_thresholds([0, 1, 2, 3], 3).thresholds == (2, 1, 0)


def test_fit_thresholds_auto():
    assert fit_thresholds_auto([0, 1, 3, 3]).thresholds == (3, 1, 0)
    assert fit_thresholds_auto([2.5] * 4).thresholds == (2.5,)
    with pytest.raises(ValueError):
        fit_thresholds_auto([])


def test_threshold_sequences_are_strictly_decreasing():
    rng = random.Random(3)
    for _ in range(30):
        values = [rng.choice([0, 0.5, 1, 2, 4, 8]) for _ in range(rng.randint(1, 20))]
        filt = fit_thresholds_auto(values)
        assert all(a > b for a, b in zip(filt.thresholds, filt.thresholds[1:]))
        assert filt.thresholds[-1] <= min(values)
    with pytest.raises(ValueError, match="strictly decreasing"):
        Filtration((1.0, 1.0))


def test_filtration_graph_boundaries():
    g = path3(2.0, 1.0)
    assert filtration_graph(g, 0.5).edges == g.edges
    assert filtration_graph(g, 5.0).edges == ()
    assert filtration_graph(g, 5.0).n == 3
    assert filtration_graph(g, 2.0).edges == ((0, 1),)


def test_filtration_graph_triangle_level():
    prism = prism_graph().with_weights(weight_triangles(prism_graph()))
    level1 = filtration_graph(prism, 1)
    assert set(level1.edges) == {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    k33 = k33_graph().with_weights(weight_triangles(k33_graph()))
    assert filtration_graph(k33, 1).edges == ()


def test_nestedness_and_last_level():
    rng = random.Random(17)
    for _ in range(20):
        g = random_graph(rng, max_n=10)
        g = g.with_weights(weight_degree(g))
        filt = fit_thresholds_auto(g.weights) if g.edges else None
        if filt is None:
            continue
        seq = filtration_sequence(g, filt)
        for earlier, later in zip(seq, seq[1:]):
            assert set(earlier.edges) <= set(later.edges)
        assert seq[-1].edges == g.edges


def test_isomorphic_graphs_give_isomorphic_filtrations():
    rng = random.Random(23)
    for _ in range(10):
        g = random_graph(rng, max_n=8)
        g = g.with_weights([round(rng.uniform(0, 2), 2) for _ in g.edges])
        perm = list(range(g.n))
        rng.shuffle(perm)
        p = permute_graph(g, perm)
        for alpha in sorted(set(g.weights), reverse=True) or [0]:
            direct = permute_graph(filtration_graph(g, alpha), perm)
            assert direct == filtration_graph(p, alpha)
