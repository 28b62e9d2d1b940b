"""Graph-pair kernels over feature tables and Gram-matrix assembly."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .filtration import (
    Filtration,
    WeightFunctionSpec,
    fit_thresholds,
    fit_thresholds_auto,
    pooled_weights,
    reweight,
)
from .graphs import GraphDataset
from .transport import GroundLine, wasserstein_cdf_points
from .wl import FeatureTable, LabelInterner, extract_all

VARIANTS = ("linear_combination", "product")


@dataclass(frozen=True)
class KernelConfig:
    """Hyperparameters of a kernel run.

    h is the refinement depth, gamma the decay of the per-feature base
    kernel, beta the mass-difference decay of the product variant.
    """

    h: int = 2
    gamma: float = 1.0
    beta: float = 1.0
    variant: str = "linear_combination"
    normalize: bool = False

    def __post_init__(self):
        if self.h < 0:
            raise ValueError("h must be >= 0")
        if self.gamma <= 0:
            raise ValueError("gamma must be positive")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}, expected one of {VARIANTS}")
        if self.variant == "product" and self.beta <= 0:
            raise ValueError("beta must be positive for the product variant")


@dataclass(frozen=True)
class GramMatrix:
    """Pairwise kernel values over a dataset, with the class labels riding along."""

    values: np.ndarray
    graph_ids: tuple[int, ...]
    class_labels: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.graph_ids)


def _check_tables(t1: FeatureTable, t2: FeatureTable, line: GroundLine) -> None:
    if t1.num_levels != len(line) or t2.num_levels != len(line):
        raise ValueError(
            f"feature tables over {t1.num_levels}/{t2.num_levels} levels do not match "
            f"ground line of length {len(line)}"
        )


def filtration_kernel_pair(
    t1: FeatureTable,
    t2: FeatureTable,
    line: GroundLine,
    gamma: float,
) -> float:
    """Sum over shared features of exp(-gamma*W) weighted by both histogram masses.

    Features present in only one graph contribute zero, so only the
    intersection is visited; ids are visited in ascending order to keep the
    float result run-deterministic.
    """
    _check_tables(t1, t2, line)
    small, large = (t1, t2) if len(t1.features) <= len(t2.features) else (t2, t1)
    shared = sorted(fid for fid in small.features if fid in large.features)
    total = 0.0
    for fid in shared:
        h1 = t1.features[fid]
        h2 = t2.features[fid]
        w = wasserstein_cdf_points(h1.nonzero_cdf, h2.nonzero_cdf, line)
        total += math.exp(-gamma * w) * h1.mass * h2.mass
    return total


def product_kernel_pair(
    t1: FeatureTable,
    t2: FeatureTable,
    line: GroundLine,
    gamma: float,
    beta: float,
) -> float:
    """Product over features of base kernel times a mass-difference RBF factor.

    A feature absent from one table keeps a base factor of 1 and contributes
    only exp(-beta * mass^2); absent from both, it contributes 1 and is
    skipped. The product is accumulated in log space to avoid underflow.
    """
    _check_tables(t1, t2, line)
    log_total = 0.0
    for fid in sorted(set(t1.features) | set(t2.features)):
        h1 = t1.features.get(fid)
        h2 = t2.features.get(fid)
        if h1 is not None and h2 is not None:
            w = wasserstein_cdf_points(h1.nonzero_cdf, h2.nonzero_cdf, line)
            log_total -= gamma * w
            diff = h1.mass - h2.mass
        elif h1 is not None:
            diff = h1.mass
        else:
            diff = h2.mass
        log_total -= beta * diff * diff
    return math.exp(log_total)


def histogram_kernel_pair(t1: FeatureTable, t2: FeatureTable) -> float:
    """Feature-frequency dot product; defined only for single-level tables."""
    if t1.num_levels != 1 or t2.num_levels != 1:
        raise ValueError("histogram kernel requires feature tables with a single level")
    small, large = (t1, t2) if len(t1.features) <= len(t2.features) else (t2, t1)
    shared = sorted(fid for fid in small.features if fid in large.features)
    total = 0.0
    for fid in shared:
        total += 1.0 * t1.features[fid].mass * t2.features[fid].mass
    return total


def squared_kernel_distance(values: np.ndarray, i: int, j: int) -> float:
    """Squared feature-space distance K(i,i) + K(j,j) - 2 K(i,j)."""
    return float(values[i, i] + values[j, j] - 2.0 * values[i, j])


def gram_matrix(
    dataset: GraphDataset,
    spec: WeightFunctionSpec,
    k: int | str,
    config: KernelConfig,
    threads: int = 1,
) -> GramMatrix:
    """Full pipeline: weights, shared thresholds, feature tables, kernel matrix.

    `k` is the filtration length, or the string 'auto' for one threshold per
    distinct pooled edge weight. Cosine normalization rescales to unit
    diagonal when requested.
    """
    if len(dataset) == 0:
        raise ValueError("dataset is empty")
    if any(g.n == 0 for g in dataset.graphs):
        raise ValueError("dataset contains a graph with zero vertices")

    weighted = [reweight(g, spec) for g in dataset.graphs]
    pooled = [w for g in weighted for w in g.weights]
    filtration = fit_thresholds_auto(pooled) if k == "auto" else fit_thresholds(pooled, int(k))
    return gram_matrix_for_filtration(dataset, spec, filtration, config, threads=threads)


def gram_matrix_for_filtration(
    dataset: GraphDataset,
    spec: WeightFunctionSpec,
    filtration: Filtration,
    config: KernelConfig,
    threads: int = 1,
) -> GramMatrix:
    """Kernel matrix over an explicitly supplied threshold sequence."""
    if len(dataset) == 0:
        raise ValueError("dataset is empty")
    if any(g.n == 0 for g in dataset.graphs):
        raise ValueError("dataset contains a graph with zero vertices")
    weighted = [reweight(g, spec) for g in dataset.graphs]

    interner = LabelInterner()
    tables = extract_all(weighted, filtration, config.h, interner, threads=threads)
    line = GroundLine(tuple(float(t) for t in filtration.thresholds))

    if config.variant == "product":
        pair: Callable[[FeatureTable, FeatureTable], float] = lambda a, b: product_kernel_pair(
            a, b, line, config.gamma, config.beta
        )
    else:
        pair = lambda a, b: filtration_kernel_pair(a, b, line, config.gamma)

    n = len(tables)
    values = np.zeros((n, n), dtype=np.float64)

    def fill_row(i: int) -> None:
        for j in range(i, n):
            values[i, j] = pair(tables[i], tables[j])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill_row, range(n)))
    else:
        for i in range(n):
            fill_row(i)
    for i in range(n):
        for j in range(i + 1, n):
            values[j, i] = values[i, j]

    if config.normalize:
        diag = np.diag(values).copy()
        if np.any(diag <= 0):
            raise ValueError("cannot cosine-normalize: zero self-kernel value")
        scale = 1.0 / np.sqrt(diag)
        values = values * scale[:, None] * scale[None, :]
        np.fill_diagonal(values, 1.0)

    return GramMatrix(
        values=values,
        graph_ids=tuple(range(n)),
        class_labels=dataset.class_labels,
    )


def build_filtration(
    dataset: GraphDataset, spec: WeightFunctionSpec, k: int | str
) -> Filtration:
    """The shared threshold sequence a `gram_matrix` call would use."""
    pooled = pooled_weights(dataset.graphs, spec)
    return fit_thresholds_auto(pooled) if k == "auto" else fit_thresholds(pooled, int(k))
