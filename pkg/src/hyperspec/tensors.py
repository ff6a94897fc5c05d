"""Adjacency, Laplacian and signless Laplacian tensors of uniform hypergraphs.

The hypergraph tensors are applied matrix-free from the edge list. A dense
materialization and a brute-force contraction are kept as oracles for small
instances.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .hypergraph import UniformHypergraph
from .validation import check_vector

#: Hard cap on ``n**k`` for :func:`materialize`.
DENSE_BUDGET = 10**7

#: Factors below this magnitude switch the edge product to log space.
_TINY = 1e-150


class TensorKind(enum.Enum):
    ADJACENCY = "A"
    LAPLACIAN = "L"
    SIGNLESS_LAPLACIAN = "Q"

    @classmethod
    def parse(cls, value) -> "TensorKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_").replace(" ", "_")
        aliases = {
            "a": cls.ADJACENCY, "adjacency": cls.ADJACENCY,
            "l": cls.LAPLACIAN, "laplacian": cls.LAPLACIAN,
            "q": cls.SIGNLESS_LAPLACIAN, "signless_laplacian": cls.SIGNLESS_LAPLACIAN,
            "signlesslaplacian": cls.SIGNLESS_LAPLACIAN,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown tensor kind {value!r}; use A, L or Q") from None


class DenseBudgetError(MemoryError):
    pass


@dataclass
class DenseTensor:
    """Order-``k`` dimension-``n`` array, ``entries.shape == (n,) * k``."""

    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.ndim

    @property
    def dim(self) -> int:
        return self.entries.shape[0] if self.entries.ndim else 0

    def to_dict(self) -> dict:
        return {"order": self.order, "dim": self.dim, "entries": self.entries.ravel(order="C").tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "DenseTensor":
        shape = (int(data["dim"]),) * int(data["order"])
        return cls(np.asarray(data["entries"], dtype=np.float64).reshape(shape))


def power_vec(x: np.ndarray, r) -> np.ndarray:
    """Elementwise power ``x^[r]``."""
    return np.power(x, r)


def k_norm(x: np.ndarray, k: int) -> float:
    return float(np.sum(np.abs(x) ** k) ** (1.0 / k))


def _cofactor_products(X: np.ndarray) -> np.ndarray:
    """``P[e, j]`` = product of row ``e`` of ``X`` with column ``j`` left out."""
    m, k = X.shape
    P = np.empty_like(X)
    if m == 0:
        return P
    tiny = np.any(np.abs(X) < _TINY, axis=1)
    plain = ~tiny
    if plain.any():
        Y = X[plain]
        ones = np.ones((Y.shape[0], 1))
        prefix = np.cumprod(np.hstack([ones, Y[:, :-1]]), axis=1)
        suffix = np.cumprod(np.hstack([ones, Y[:, :0:-1]]), axis=1)[:, ::-1]
        P[plain] = prefix * suffix
    if tiny.any():
        Y = X[tiny]
        zeros = np.zeros((Y.shape[0], 1))
        with np.errstate(divide="ignore"):
            logs = np.log(np.abs(Y))
        sgn = np.where(Y < 0, -1.0, 1.0)
        ones = np.ones_like(zeros)
        lpre = np.cumsum(np.hstack([zeros, logs[:, :-1]]), axis=1)
        lsuf = np.cumsum(np.hstack([zeros, logs[:, :0:-1]]), axis=1)[:, ::-1]
        spre = np.cumprod(np.hstack([ones, sgn[:, :-1]]), axis=1)
        ssuf = np.cumprod(np.hstack([ones, sgn[:, :0:-1]]), axis=1)[:, ::-1]
        P[tiny] = spre * ssuf * np.exp(lpre + lsuf)
    return P


def adjacency_apply(H: UniformHypergraph, x: np.ndarray) -> np.ndarray:
    """``(A x)_v`` = sum over edges containing ``v`` of the product of the other members."""
    E = H.edge_array
    P = _cofactor_products(x[E])
    # bincount walks the flattened array in canonical edge order
    return np.bincount(E.ravel(), weights=P.ravel(), minlength=H.n)


def apply(kind, H: UniformHypergraph, x) -> np.ndarray:
    """Apply the kind's tensor to ``x`` without materializing it."""
    kind = TensorKind.parse(kind)
    x = check_vector(x, H.n)
    ax = adjacency_apply(H, x)
    if kind is TensorKind.ADJACENCY:
        return ax
    dx = H.degrees * x ** (H.k - 1)
    if kind is TensorKind.SIGNLESS_LAPLACIAN:
        return dx + ax
    return dx - ax


def materialize(kind, H: UniformHypergraph) -> DenseTensor:
    kind = TensorKind.parse(kind)
    n, k = H.n, H.k
    if n**k > DENSE_BUDGET:
        raise DenseBudgetError(f"n^k = {n}^{k} exceeds the dense budget of {DENSE_BUDGET} entries")
    T = np.zeros((n,) * k)
    sign = -1.0 if kind is TensorKind.LAPLACIAN else 1.0
    w = sign / math.factorial(k - 1)
    for e in H.edges:
        for idx in permutations(e):
            T[idx] = w
    if kind is not TensorKind.ADJACENCY:
        for v, d in enumerate(H.degrees):
            T[(v,) * k] = d
    return DenseTensor(T)


def dense_apply(T: DenseTensor, x) -> np.ndarray:
    """Brute-force ``(T x)_i = sum T[i, i2..ik] x_i2 ... x_ik``."""
    if T.order < 2:
        raise ValueError("dense_apply needs a tensor of order >= 2")
    x = check_vector(x, T.dim)
    y = T.entries
    for _ in range(T.order - 1):
        y = y @ x
    return y


def general_product(A: DenseTensor, B: DenseTensor) -> DenseTensor:
    """Product of an order-m tensor with an order-k tensor; result has order (m-1)(k-1)+1.

    ``C[i, a1, .., a_{m-1}] = sum A[i, i2..im] B[i2, a1] ... B[im, a_{m-1}]``
    where each ``a_j`` is a multi-index over B's trailing k-1 axes.
    """
    m, k = A.order, B.order
    if m < 2 or k < 1:
        raise ValueError("general_product needs order(A) >= 2 and order(B) >= 1")
    if A.dim != B.dim:
        raise ValueError(f"dimension mismatch: {A.dim} vs {B.dim}")
    a_axes = list(range(m))
    operands: list = [A.entries, a_axes]
    out = [0]
    nxt = m
    for j in range(1, m):
        tail = list(range(nxt, nxt + k - 1))
        nxt += k - 1
        operands += [B.entries, [j, *tail]]
        out += tail
    if nxt > 52:
        raise ValueError("general_product result order too large for einsum")
    return DenseTensor(np.asarray(np.einsum(*operands, out)))


def residual(kind, H: UniformHypergraph, lam: float, x) -> float:
    """Max-norm eigen-residual ``|T x - lam x^[k-1]|``, divided by ``max|x|^(k-1)``.

    Scale invariant, and zero exactly for eigenpairs.
    """
    x = check_vector(x, H.n, nonzero=True)
    r = apply(kind, H, x) - lam * x ** (H.k - 1)
    return float(np.max(np.abs(r)) / np.max(np.abs(x)) ** (H.k - 1))
