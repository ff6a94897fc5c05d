"""Largest H-eigenvalues of hypergraph tensors.

Nonnegative kinds (A, Q) use the power method for nonnegative tensors with
Collatz-Wielandt bracketing. The Laplacian is handled only for ordinary
graphs and for even-uniform odd-bipartite hypergraphs.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .hypergraph import (
    HypergraphError,
    PowerVertexMap,
    UniformHypergraph,
    components,
    insert_pendant,
    is_odd_bipartite,
)
from .tensors import DenseTensor, TensorKind, apply, dense_apply, k_norm, residual
from .validation import check_vector

logger = logging.getLogger(__name__)

STAGNATION_WINDOW = 10_000
STAGNATION_RATIO = 1e-3


class ConvergenceError(RuntimeError):
    """Iteration cap reached; ``result`` holds the last enclosure."""

    def __init__(self, message: str, result: "SpectralResult"):
        super().__init__(message)
        self.result = result


class UnsupportedError(ValueError):
    pass


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-10
    max_iter: int = 10**6
    shift: float = 1.0

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.shift < 0:
            raise ValueError(f"shift must be nonnegative, got {self.shift}")


@dataclass
class SpectralResult:
    lam: float
    lower: float
    upper: float
    eigenvector: np.ndarray
    iterations: int
    residual: float = float("nan")
    flags: list[str] = field(default_factory=list)

    @property
    def converged(self) -> bool:
        return "max_iter" not in self.flags and "stagnated" not in self.flags

    def to_dict(self) -> dict:
        return {
            "lambda": float(self.lam),
            "lower": float(self.lower),
            "upper": float(self.upper),
            "iterations": int(self.iterations),
            "residual": float(self.residual),
            "eigenvector": [float(v) for v in self.eigenvector],
            "flags": list(self.flags),
        }


def power_iteration(
    operator: Callable[[np.ndarray], np.ndarray],
    n: int,
    k: int,
    cfg: SolverConfig = SolverConfig(),
    shift: float = 0.0,
) -> SpectralResult:
    """Power method ``x <- normalize((T x + shift x^[k-1])^[1/(k-1)])`` from the all-ones vector.

    ``operator`` must map positive vectors to positive vectors (weakly
    irreducible input). Stops when the Collatz-Wielandt bounds of the shifted
    tensor are within ``cfg.tol``; the shift is taken off the returned values.
    The eigenvector is the iterate the final bounds were measured at, scaled
    to unit k-norm.
    """
    x = np.ones(n)
    root = 1.0 / (k - 1)
    gap_mark = math.inf
    lower = upper = math.nan
    flags: list[str] = []
    it = 0
    while True:
        it += 1
        xk = x ** (k - 1)
        y = operator(x) + shift * xk
        ratios = y / xk
        lower, upper = float(ratios.min()), float(ratios.max())
        gap = upper - lower
        if gap <= cfg.tol:
            break
        if it >= cfg.max_iter:
            flags.append("max_iter")
            break
        if it % STAGNATION_WINDOW == 0:
            if gap > (1.0 - STAGNATION_RATIO) * gap_mark:
                logger.warning("power iteration stagnated at gap %.3g after %d iterations", gap, it)
                flags.append("stagnated")
                break
            gap_mark = gap
        x = y**root
        x /= x.max()
    lam = 0.5 * (lower + upper)
    result = SpectralResult(
        lam=lam - shift,
        lower=lower - shift,
        upper=upper - shift,
        eigenvector=x / k_norm(x, k),
        iterations=it,
        flags=flags,
    )
    if "max_iter" in flags:
        raise ConvergenceError(f"no convergence in {cfg.max_iter} iterations (gap {upper - lower:.3g})", result)
    return result


def _nonnegative_kind(kind) -> TensorKind:
    kind = TensorKind.parse(kind)
    if kind is TensorKind.LAPLACIAN:
        raise UnsupportedError("Laplacian is not nonnegative; use laplacian_largest")
    return kind


def _solve_connected(kind: TensorKind, H: UniformHypergraph, cfg: SolverConfig) -> SpectralResult:
    if H.m == 0:
        # a lone vertex: every tensor entry is zero
        return SpectralResult(0.0, 0.0, 0.0, np.ones(H.n), 0, 0.0)
    shift = cfg.shift if kind is TensorKind.ADJACENCY else 0.0
    return power_iteration(lambda v: apply(kind, H, v), H.n, H.k, cfg, shift=shift)


def _combine(parts, H: UniformHypergraph, flags: list[str]) -> SpectralResult:
    """Max over components; the winner's eigenvector is zero-padded into ``H``."""
    best = max(range(len(parts)), key=lambda i: (parts[i][0].lam, -i))
    res, back = parts[best]
    x = np.zeros(H.n)
    x[back] = res.eigenvector
    x /= k_norm(x, H.k)
    merged_flags = list(flags)
    for r, _ in parts:
        merged_flags += [f for f in r.flags if f not in merged_flags]
    return SpectralResult(
        lam=res.lam,
        lower=max(r.lower for r, _ in parts),
        upper=max(r.upper for r, _ in parts),
        eigenvector=x,
        iterations=sum(r.iterations for r, _ in parts),
        flags=merged_flags,
    )


def largest_h_eigenvalue(kind, H: UniformHypergraph, cfg: SolverConfig = SolverConfig()) -> SpectralResult:
    """Largest H-eigenvalue of the adjacency or signless Laplacian tensor of ``H``.

    Disconnected input is solved per component and the maximum returned;
    isolated vertices count as eigenvalue 0.

    Raises
    ------
    UnsupportedError
        For the Laplacian.
    ConvergenceError
        When a component hits ``cfg.max_iter``.
    """
    kind = _nonnegative_kind(kind)
    if H.n == 0:
        raise HypergraphError("hypergraph has no vertices")
    comps = components(H)
    if len(comps) == 1:
        res = _solve_connected(kind, H, cfg)
    else:
        parts = []
        for C, back in comps:
            try:
                parts.append((_solve_connected(kind, C, cfg), back))
            except ConvergenceError as exc:
                exc.result.flags.append("disconnected")
                raise
        res = _combine(parts, H, ["disconnected"])
    res.residual = residual(kind, H, res.lam, res.eigenvector)
    return res


def dense_largest_h_eigenvalue(T: DenseTensor, cfg: SolverConfig = SolverConfig(), shift: float = 0.0) -> SpectralResult:
    """Same power method on a materialized nonnegative, weakly irreducible tensor."""
    return power_iteration(lambda v: dense_apply(T, v), T.dim, T.order, cfg, shift=shift)


def _graph_laplacian_largest(H: UniformHypergraph, cfg: SolverConfig) -> SpectralResult:
    # L is PSD, so plain power iteration finds its top eigenvalue; the all-ones
    # start lies in its kernel, hence a fixed pseudo-random start.
    n = H.n
    if H.m == 0:
        x = np.zeros(n)
        x[0] = 1.0
        return SpectralResult(0.0, 0.0, 0.0, x, 0, 0.0)
    x = np.random.default_rng(0).uniform(0.5, 1.5, n) * np.where(np.arange(n) % 2, -1.0, 1.0)
    x /= np.linalg.norm(x)
    flags: list[str] = []
    gap_mark = math.inf
    it = 0
    while True:
        it += 1
        y = apply(TensorKind.LAPLACIAN, H, x)
        rho = float(x @ y)
        r = float(np.linalg.norm(y - rho * x))
        lower, upper = rho - r, rho + r
        if upper - lower <= cfg.tol:
            break
        if it >= cfg.max_iter:
            flags.append("max_iter")
            break
        if it % STAGNATION_WINDOW == 0:
            if upper - lower > (1.0 - STAGNATION_RATIO) * gap_mark:
                flags.append("stagnated")
                break
            gap_mark = upper - lower
        x = y / np.linalg.norm(y)
    res = SpectralResult(rho, lower, upper, x, it, flags=flags)
    if "max_iter" in flags:
        raise ConvergenceError(f"no convergence in {cfg.max_iter} iterations", res)
    return res


def laplacian_largest(H: UniformHypergraph, cfg: SolverConfig = SolverConfig()) -> SpectralResult:
    """Largest Laplacian H-eigenvalue, for graphs and even-uniform odd-bipartite hypergraphs.

    For even ``k`` with an odd-bipartition the value is the signless Laplacian
    one. The returned eigenvector is the Q eigenvector with signs flipped on
    the first side of the partition, which is a genuine Laplacian
    eigenvector, and the residual is measured against L.
    """
    if H.k == 2:
        res = _graph_laplacian_largest(H, cfg)
    else:
        if H.k % 2:
            raise UnsupportedError("unsupported: general Laplacian H-eigenvalue out of scope (odd k)")
        part = is_odd_bipartite(H)
        if part is None and H.m > 0:
            raise UnsupportedError("unsupported: general Laplacian H-eigenvalue out of scope (not odd-bipartite)")
        res = largest_h_eigenvalue(TensorKind.SIGNLESS_LAPLACIAN, H, cfg)
        if part is not None:
            res.eigenvector = np.where(part.side, -1.0, 1.0) * res.eigenvector
        res.flags.append("odd-bipartite")
    res.residual = residual(TensorKind.LAPLACIAN, H, res.lam, res.eigenvector)
    return res


@dataclass(frozen=True)
class SunflowerSystem:
    d: int
    k: int
    a: float
    b: float
    lam: float


def sunflower_poly(lam: float, d: int, k: int) -> float:
    """``(lam - d)(lam - 1)^(k-1) - d``; its largest root is the sunflower's Q eigenvalue."""
    return (lam - d) * (lam - 1.0) ** (k - 1) - d


def sunflower_q_lambda(d: int, k: int, xtol: float = 1e-13) -> SunflowerSystem:
    """Closed-form signless Laplacian eigenvalue of the sunflower ``S_d^k`` by bisection on ``[d, 2d]``.

    The principal eigenvector is ``a`` on the heart and ``b = 1`` on every
    petal vertex, with ``a = lam - 1``.
    """
    if d < 1 or k < 2:
        raise ValueError(f"need d >= 1 and k >= 2, got d={d}, k={k}")
    lo, hi = float(d), 2.0 * d
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if sunflower_poly(mid, d, k) < 0:
            lo = mid
        else:
            hi = mid
    lam = 0.5 * (lo + hi)
    return SunflowerSystem(d=d, k=k, a=lam - 1.0, b=1.0, lam=lam)


def lift_adjacency_eigenpair(
    G: UniformHypergraph,
    mu: float,
    x,
    k: int,
    s: int,
    vmap: PowerVertexMap,
    pre_tol: float = 1e-10,
) -> tuple[float, np.ndarray]:
    """Lift an adjacency eigenpair of a graph to the generalized power ``G^{k,s}``.

    Vertex copies of ``v`` get ``x_v^(2/k)``; padding vertices of edge
    ``{u, v}`` get ``(x_u x_v / mu)^(1/k)``. The lifted eigenvalue is
    ``mu^(2s/k)``.
    """
    x = check_vector(x, G.n, nonzero=True)
    if mu == 0:
        raise ValueError("lift needs a nonzero eigenvalue")
    if mu < 0 or np.any(x < 0):
        raise ValueError("lift undefined over reals for this eigenpair")
    pre = residual(TensorKind.ADJACENCY, G, mu, x)
    if pre > pre_tol:
        raise ValueError(f"(mu, x) is not an adjacency eigenpair of G (residual {pre:.3g})")
    n_new = vmap.size
    y = np.empty(n_new)
    for v, block in enumerate(vmap.vertex_blocks):
        y[list(block)] = x[v] ** (2.0 / k)
    for (u, v), block in zip(G.edges, vmap.edge_blocks):
        if block:
            y[list(block)] = (x[u] * x[v] / mu) ** (1.0 / k)
    return mu ** (2.0 * s / k), y


@dataclass
class ComparisonCertificate:
    """Nonnegative ``y`` with ``T y <= mu y^[k-1]``; ``strict_index`` marks a coordinate with positive slack."""

    mu: float
    y: np.ndarray
    slack: np.ndarray
    strict_index: Optional[int]
    equality: bool
    hypergraph: UniformHypergraph

    @property
    def strict(self) -> bool:
        return self.strict_index is not None


def pendant_certificate(
    H: UniformHypergraph,
    res: SpectralResult,
    tol: float = 1e-10,
    strict_tol: float = 1e-9,
) -> ComparisonCertificate:
    """Certify ``lambda(Q(H')) <= lambda(Q(H))`` for ``H' = insert_pendant(H)``.

    Keeps the principal eigenvector on old vertices and puts, on the new
    pendant of edge ``i``, the smallest entry over that edge. ``H`` made of
    disjoint single edges is reported as the equality case.
    """
    Hp = insert_pendant(H)
    x = res.eigenvector
    if x.shape[0] != H.n or np.any(x < 0):
        raise CertificateError("eigenvector does not belong to a signless Laplacian solve of H")
    y = np.empty(Hp.n)
    y[: H.n] = x
    for i, e in enumerate(H.edges):
        y[H.n + i] = x[e[int(np.argmin(x[list(e)]))]]
    slack = res.lam * y ** (Hp.k - 1) - apply(TensorKind.SIGNLESS_LAPLACIAN, Hp, y)
    if slack.min() < -10 * tol:
        raise CertificateError(f"negative slack {slack.min():.3g}; input eigenpair looks unconverged")
    equality = bool(np.all(H.degrees == 1))
    strict_index = None
    if not equality and slack.max() > strict_tol:
        strict_index = int(np.argmax(slack))
    return ComparisonCertificate(res.lam, y, slack, strict_index, equality, Hp)
