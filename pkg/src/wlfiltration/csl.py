"""Circular skip link graph generation for expressiveness benchmarks."""

from __future__ import annotations

import random

from .graphs import GraphDataset, LabeledGraph, permute_graph

# Skip values for which the order-41 graphs are pairwise non-isomorphic.
BENCHMARK_SKIPS = (2, 3, 4, 5, 6, 9, 11, 12, 13, 16)
BENCHMARK_ORDER = 41


def csl_graph(n: int, s: int) -> LabeledGraph:
    """4-regular graph: an n-cycle plus chords between vertices at cycle distance s."""
    if n < 5:
        raise ValueError(f"n={n} too small, need n >= 5")
    if s < 2:
        raise ValueError(f"skip s={s} must be at least 2 (s=1 duplicates cycle edges)")
    if 2 * s >= n:
        raise ValueError(f"skip s={s} needs 2s < n, got n={n} (graph would not stay simple)")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + s) % n) for i in range(n)]
    return LabeledGraph.build(n, edges)


def generate_csl(n: int, s: int, copies: int, seed: int) -> GraphDataset:
    """The base skip-s graph plus copies-1 seeded random vertex permutations.

    Permutations come from Python's Mersenne Twister (`random.Random`), so a
    given seed reproduces the dataset on any platform. Class label = s.
    """
    if copies < 1:
        raise ValueError("copies must be >= 1")
    base = csl_graph(n, s)
    # string seeding hashes with SHA-512: stable across platforms and runs
    rng = random.Random(f"csl:{seed}:{n}:{s}")
    graphs = [base]
    for _ in range(copies - 1):
        perm = list(range(n))
        rng.shuffle(perm)
        graphs.append(permute_graph(base, perm))
    return GraphDataset(tuple(graphs), (s,) * copies, name=f"CSL_{n}_{s}")


def generate_csl_benchmark(copies: int = 10, seed: int = 0) -> GraphDataset:
    """Union of the ten order-41 benchmark skip classes, `copies` graphs each."""
    graphs: list[LabeledGraph] = []
    labels: list[int] = []
    for s in BENCHMARK_SKIPS:
        part = generate_csl(BENCHMARK_ORDER, s, copies, seed)
        graphs.extend(part.graphs)
        labels.extend(part.class_labels)
    return GraphDataset(tuple(graphs), tuple(labels), name=f"CSL_{BENCHMARK_ORDER}")
