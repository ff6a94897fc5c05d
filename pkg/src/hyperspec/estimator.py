"""scikit-learn style wrapper around the largest H-eigenvalue solvers."""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .eigen import SolverConfig, laplacian_largest, largest_h_eigenvalue
from .tensors import TensorKind
from .validation import check_hypergraph


class LargestHEigenvalue(BaseEstimator):
    """Largest H-eigenvalue of a hypergraph tensor.

    Parameters
    ----------
    kind : {"Q", "A", "L"}, default="Q"
        Signless Laplacian, adjacency or Laplacian tensor.
    tol : float, default=1e-10
        Width of the Collatz-Wielandt enclosure at which iteration stops.
    max_iter : int, default=1_000_000
    shift : float, default=1.0
        Diagonal shift used while iterating on the adjacency tensor.

    Attributes
    ----------
    eigenvalue_ : float
    eigenvector_ : ndarray of shape (n_vertices,)
        Unit k-norm.
    bounds_ : tuple of float
        ``(lower, upper)`` enclosure at termination.
    n_iter_ : int
    residual_ : float
    result_ : SpectralResult

    Examples
    --------
    >>> from hyperspec.hypergraph import sunflower
    >>> round(LargestHEigenvalue().fit(sunflower(1, 3)).eigenvalue_, 10)
    2.0
    """

    def __init__(self, kind="Q", tol=1e-10, max_iter=1_000_000, shift=1.0):
        self.kind = kind
        self.tol = tol
        self.max_iter = max_iter
        self.shift = shift

    def fit(self, H, y=None):
        H = check_hypergraph(H)
        cfg = SolverConfig(tol=self.tol, max_iter=self.max_iter, shift=self.shift)
        kind = TensorKind.parse(self.kind)
        if kind is TensorKind.LAPLACIAN:
            res = laplacian_largest(H, cfg)
        else:
            res = largest_h_eigenvalue(kind, H, cfg)
        self.result_ = res
        self.eigenvalue_ = res.lam
        self.eigenvector_ = res.eigenvector
        self.bounds_ = (res.lower, res.upper)
        self.n_iter_ = res.iterations
        self.residual_ = res.residual
        self.n_vertices_ = H.n
        return self
