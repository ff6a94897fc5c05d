"""Largest H-eigenvalues of adjacency, Laplacian and signless Laplacian tensors of uniform hypergraphs."""

from .eigen import (
    ComparisonCertificate,
    ConvergenceError,
    SolverConfig,
    SpectralResult,
    SunflowerSystem,
    laplacian_largest,
    largest_h_eigenvalue,
    lift_adjacency_eigenpair,
    pendant_certificate,
    sunflower_q_lambda,
)
from .estimator import LargestHEigenvalue
from .hypergraph import (
    HypergraphError,
    UniformHypergraph,
    build_hypergraph,
    components,
    generalized_power,
    insert_pendant,
    is_odd_bipartite,
    power,
    regular_supergraph,
    sunflower,
)
from .tensors import DenseTensor, TensorKind, apply, materialize, residual

__version__ = "0.1.0"
