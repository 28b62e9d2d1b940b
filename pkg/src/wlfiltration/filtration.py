"""Edge-weight functions, k-means threshold fitting, and filtration graphs."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import LabeledGraph

WEIGHT_KINDS = ("native", "degree", "walks", "triangles")

_UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class WeightFunctionSpec:
    """Selects how edge weights are computed before filtering.

    kind 'native' keeps the weights the dataset came with; 'degree',
    'walks' and 'triangles' recompute them structurally. `walk_length`
    is the walk-length bound and only meaningful for kind 'walks'.
    """

    kind: str = "native"
    walk_length: int = 1

    def __post_init__(self):
        if self.kind not in WEIGHT_KINDS:
            raise ValueError(f"unknown weight kind {self.kind!r}, expected one of {WEIGHT_KINDS}")
        if self.kind == "walks" and self.walk_length < 1:
            raise ValueError("walk_length must be >= 1")


@dataclass(frozen=True)
class Filtration:
    """Strictly decreasing threshold sequence inducing the nested graphs."""

    thresholds: tuple[float, ...]

    def __post_init__(self):
        if not self.thresholds:
            raise ValueError("a filtration needs at least one threshold")
        for a, b in zip(self.thresholds, self.thresholds[1:]):
            if not a > b:
                raise ValueError("thresholds must be strictly decreasing")

    def __len__(self) -> int:
        return len(self.thresholds)


def weight_degree(g: LabeledGraph) -> tuple[int, ...]:
    """w({u,v}) = max(deg(u), deg(v)), aligned with g.edges."""
    deg = [len(ns) for ns in g.adjacency]
    return tuple(max(deg[u], deg[v]) for u, v in g.edges)


def weight_triangles(g: LabeledGraph) -> tuple[int, ...]:
    """w({u,v}) = number of triangles containing the edge = |N(u) ∩ N(v)|."""
    neighbor_sets = [set(ns) for ns in g.adjacency]
    return tuple(len(neighbor_sets[u] & neighbor_sets[v]) for u, v in g.edges)


def weight_walks(g: LabeledGraph, walk_length: int) -> tuple[int, ...]:
    """w({u,v}) = number of walks of length 1..walk_length from u to v.

    Exact integer arithmetic; any count above the 64-bit unsigned range is an
    overflow error rather than a silent wraparound.
    """
    if walk_length < 1:
        raise ValueError("walk_length must be >= 1")
    adj = g.adjacency
    totals = {e: 0 for e in g.edges}
    for u in range(g.n):
        # row u of A^l, accumulated over l = 1..walk_length
        row = [0] * g.n
        row[u] = 1
        acc = [0] * g.n
        for _ in range(walk_length):
            nxt = [0] * g.n
            for j in range(g.n):
                count = 0
                for t in adj[j]:
                    count += row[t]
                nxt[j] = count
                acc[j] += count
                if acc[j] > _UINT64_MAX:
                    raise OverflowError(
                        f"walk count exceeds 64-bit unsigned range for walk_length={walk_length}"
                    )
            row = nxt
        for v in adj[u]:
            if u < v:
                totals[(u, v)] = acc[v]
    return tuple(totals[e] for e in g.edges)


def compute_weights(g: LabeledGraph, spec: WeightFunctionSpec) -> tuple[float, ...]:
    """Edge-weight assignment for g under the chosen weight function."""
    if spec.kind == "native":
        return g.weights
    if spec.kind == "degree":
        return weight_degree(g)
    if spec.kind == "triangles":
        return weight_triangles(g)
    return weight_walks(g, spec.walk_length)


def reweight(g: LabeledGraph, spec: WeightFunctionSpec) -> LabeledGraph:
    """Copy of g carrying the weights computed by `spec`."""
    if spec.kind == "native":
        return g
    return g.with_weights(compute_weights(g, spec))


def _interval_sse(prefix: list[float], prefix_sq: list[float], i: int, j: int) -> float:
    """Within-cluster sum of squared deviations for values[i..j] (inclusive)."""
    s = prefix[j + 1] - prefix[i]
    sq = prefix_sq[j + 1] - prefix_sq[i]
    cnt = j - i + 1
    return sq - s * s / cnt


def fit_thresholds(dataset_weights: Iterable[float], k: int) -> Filtration:
    """Thresholds from exact 1-D k-means over the distinct weight values.

    The optimal partition of the sorted distinct values into k contiguous
    clusters (minimal total within-cluster SSE) is found by dynamic
    programming; ties prefer smaller leading clusters. Threshold i is the
    minimum element of the i-th cluster, ordered decreasingly. When fewer
    than k distinct values exist, the filtration shrinks to that count.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    values = sorted(set(dataset_weights))
    if not values:
        raise ValueError("empty edge-weight multiset")
    d = len(values)
    if k > d:
        warnings.warn(
            f"only {d} distinct edge weights; filtration length reduced from {k} to {d}",
            stacklevel=2,
        )
        k = d

    prefix = [0.0] * (d + 1)
    prefix_sq = [0.0] * (d + 1)
    for i, x in enumerate(values):
        prefix[i + 1] = prefix[i] + x
        prefix_sq[i + 1] = prefix_sq[i] + x * x

    # suffix[t][i] = minimal SSE partitioning values[i..d-1] into t clusters
    inf = float("inf")
    suffix = [[inf] * (d + 1) for _ in range(k + 1)]
    suffix[0][d] = 0.0
    for t in range(1, k + 1):
        for i in range(d - 1, -1, -1):
            best = inf
            # cluster values[i..j], then t-1 clusters on the rest
            for j in range(i, d - t + 1):
                rest = suffix[t - 1][j + 1]
                if rest == inf:
                    continue
                cost = _interval_sse(prefix, prefix_sq, i, j) + rest
                if cost < best:
                    best = cost
            suffix[t][i] = best

    # Walk forward taking the shortest cluster achieving the optimum, which
    # makes cluster sizes lexicographically minimal.
    bounds = []
    i = 0
    for t in range(k, 0, -1):
        target = suffix[t][i]
        for j in range(i, d - t + 1):
            if _interval_sse(prefix, prefix_sq, i, j) + suffix[t - 1][j + 1] <= target:
                bounds.append((i, j))
                i = j + 1
                break
    minima = [values[lo] for lo, _ in bounds]
    return Filtration(tuple(sorted(minima, reverse=True)))


def fit_thresholds_auto(dataset_weights: Iterable[float]) -> Filtration:
    """One threshold per distinct weight value, in decreasing order."""
    values = sorted(set(dataset_weights), reverse=True)
    if not values:
        raise ValueError("empty edge-weight multiset")
    return Filtration(tuple(values))


def filtration_graph(g: LabeledGraph, alpha: float) -> LabeledGraph:
    """Subgraph keeping every edge of weight >= alpha; vertices and labels unchanged."""
    keep = [i for i, w in enumerate(g.weights) if w >= alpha]
    return LabeledGraph(
        n=g.n,
        edges=tuple(g.edges[i] for i in keep),
        labels=g.labels,
        weights=tuple(g.weights[i] for i in keep),
    )


def filtration_sequence(g: LabeledGraph, filtration: Filtration) -> list[LabeledGraph]:
    """The nested graphs G_1 ⊆ ... ⊆ G_k for g under the given thresholds."""
    return [filtration_graph(g, alpha) for alpha in filtration.thresholds]


def pooled_weights(graphs: Sequence[LabeledGraph], spec: WeightFunctionSpec) -> list[float]:
    """Edge-weight multiset of a whole dataset under one weight function."""
    pooled: list[float] = []
    for g in graphs:
        pooled.extend(compute_weights(g, spec))
    return pooled
