"""Hypothesis test for the latent dimension of a torus random geometric graph."""

from rggdim.errors import (
    DegenerateVarianceError,
    EstimationFailedError,
    InvalidInputError,
    ParseError,
)
from rggdim.geometry import PointCloud, RggParams, generate_rgg, sample_points, torus_distance
from rggdim.graph import AdjacencyMatrix, closed_walk_counts, common_neighbors, degrees, from_edge_pairs
from rggdim.motifs import MotifCounts, motif_counts_fast, motif_counts_oracle
from rggdim.dimtest import (
    DegenerateResult,
    TestResult,
    compute_dn,
    compute_sigma2_hat,
    norm_cdf,
    norm_ppf,
    run_test,
    scan_m0,
)
from rggdim.simulate import SimConfig, SimReport, estimate_rejection_rate, run_replicate

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix",
    "DegenerateResult",
    "DegenerateVarianceError",
    "EstimationFailedError",
    "InvalidInputError",
    "MotifCounts",
    "ParseError",
    "PointCloud",
    "RggParams",
    "SimConfig",
    "SimReport",
    "TestResult",
    "closed_walk_counts",
    "common_neighbors",
    "compute_dn",
    "compute_sigma2_hat",
    "degrees",
    "estimate_rejection_rate",
    "from_edge_pairs",
    "generate_rgg",
    "motif_counts_fast",
    "motif_counts_oracle",
    "norm_cdf",
    "norm_ppf",
    "run_replicate",
    "run_test",
    "sample_points",
    "scan_m0",
    "torus_distance",
]
