"""Graph filtration kernels from Weisfeiler-Lehman subtree features.

Graphs are compared by tracking how often each refinement label occurs in a
nested sequence of edge-threshold subgraphs, measuring per-feature occurrence
histograms with a closed-form 1-D Wasserstein distance and combining the
resulting base kernels into a positive semi-definite graph kernel.
"""

from .csl import csl_graph, generate_csl, generate_csl_benchmark
from .filtration import (
    Filtration,
    WeightFunctionSpec,
    compute_weights,
    filtration_graph,
    filtration_sequence,
    fit_thresholds,
    fit_thresholds_auto,
    pooled_weights,
    reweight,
    weight_degree,
    weight_triangles,
    weight_walks,
)
from .gram_io import RunManifest, load_manifest, read_gram_csv, write_gram
from .graphs import (
    DatasetFormatError,
    GraphDataset,
    LabeledGraph,
    load_tud_dataset,
    permute_graph,
    vertex_degree,
    write_tud_dataset,
)
from .kernels import (
    GramMatrix,
    KernelConfig,
    build_filtration,
    filtration_kernel_pair,
    gram_matrix,
    gram_matrix_for_filtration,
    histogram_kernel_pair,
    product_kernel_pair,
    squared_kernel_distance,
)
from .transport import (
    GroundLine,
    base_kernel,
    wasserstein_1d,
    wasserstein_cdf_points,
    wasserstein_matching,
)
from .wl import (
    FeatureTable,
    FiltrationHistogram,
    LabelInterner,
    dump_feature_table,
    extract_all,
    extract_features,
    wl_refine,
)

__version__ = "0.1.0"

__all__ = [
    "DatasetFormatError",
    "FeatureTable",
    "Filtration",
    "FiltrationHistogram",
    "GramMatrix",
    "GraphDataset",
    "GroundLine",
    "KernelConfig",
    "LabelInterner",
    "LabeledGraph",
    "RunManifest",
    "WeightFunctionSpec",
    "base_kernel",
    "build_filtration",
    "compute_weights",
    "csl_graph",
    "dump_feature_table",
    "extract_all",
    "extract_features",
    "filtration_graph",
    "filtration_kernel_pair",
    "filtration_sequence",
    "fit_thresholds",
    "fit_thresholds_auto",
    "generate_csl",
    "generate_csl_benchmark",
    "gram_matrix",
    "gram_matrix_for_filtration",
    "histogram_kernel_pair",
    "load_manifest",
    "load_tud_dataset",
    "permute_graph",
    "pooled_weights",
    "product_kernel_pair",
    "read_gram_csv",
    "reweight",
    "squared_kernel_distance",
    "vertex_degree",
    "wasserstein_1d",
    "wasserstein_cdf_points",
    "wasserstein_matching",
    "weight_degree",
    "weight_triangles",
    "weight_walks",
    "wl_refine",
    "write_gram",
    "write_tud_dataset",
]
