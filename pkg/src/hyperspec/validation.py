"""Input validation helpers shared by the functional API and the estimator."""

from __future__ import annotations

from collections.abc import Mapping

import numpy as np

from .hypergraph import HypergraphError, UniformHypergraph, build_hypergraph


def check_hypergraph(H) -> UniformHypergraph:
    """Accept a :class:`UniformHypergraph` or a ``{"k", "n", "edges"}`` mapping."""
    if isinstance(H, UniformHypergraph):
        return H
    if isinstance(H, Mapping):
        try:
            return build_hypergraph(H["n"], H["k"], H["edges"])
        except KeyError as exc:
            raise HypergraphError(f"hypergraph mapping is missing key {exc}") from None
    raise TypeError(f"expected a UniformHypergraph or mapping, got {type(H).__name__}")


def check_vector(x, n: int, *, nonzero: bool = False) -> np.ndarray:
    """Return ``x`` as a finite float64 vector of length ``n``."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.shape[0] != n:
        raise ValueError(f"dimension mismatch: expected vector of length {n}, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector has non-finite entries")
    if nonzero and not np.any(x):
        raise ValueError("zero vector")
    return x
