"""Numerical checks of the spectral results on power hypergraphs.

Each check computes both sides of an identity or inequality through
independent routes and returns a :class:`CheckReport`. Scans over the
uniformity produce a :class:`ScanTable`.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

import numpy as np

from . import hypergraph as hg
from .eigen import (
    ConvergenceError,
    SolverConfig,
    SpectralResult,
    lift_adjacency_eigenpair,
    laplacian_largest,
    largest_h_eigenvalue,
    sunflower_q_lambda,
)
from .hypergraph import UniformHypergraph
from .tensors import TensorKind, apply, residual

CSV_HEADER = ("k", "lambda", "lower", "upper", "iterations")


def fmt(value: float) -> str:
    """12 significant digits, always with a decimal point or exponent."""
    s = f"{value:.12g}"
    if s.lstrip("-").isdigit():
        s += ".0"
    return s


@dataclass
class ScanRow:
    k: int
    lam: float
    lower: float
    upper: float
    iterations: int
    flags: list[str] = field(default_factory=list)


@dataclass
class ScanTable:
    base: str
    kind: str
    rows: list[ScanRow]
    is_strictly_decreasing: bool
    limit_target: float
    final_gap: float
    above_limit: bool
    step_ratios: list[float]
    margin: float

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([r.k, fmt(r.lam), fmt(r.lower), fmt(r.upper), r.iterations])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "kind": self.kind,
            "rows": [
                {"k": r.k, "lambda": r.lam, "lower": r.lower, "upper": r.upper,
                 "iterations": r.iterations, "flags": r.flags}
                for r in self.rows
            ],
            "is_strictly_decreasing": self.is_strictly_decreasing,
            "limit_target": self.limit_target,
            "final_gap": self.final_gap,
            "above_limit": self.above_limit,
            "step_ratios": self.step_ratios,
            "margin": self.margin,
        }


@dataclass
class CheckReport:
    name: str
    passed: bool
    measured: dict
    expected: dict
    tolerance: float
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "measured": self.measured,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "notes": self.notes,
        }

    def to_csv_rows(self) -> list[list[str]]:
        rows = []
        for key in sorted(set(self.measured) | set(self.expected)):
            m, e = self.measured.get(key, ""), self.expected.get(key, "")
            rows.append([self.name, str(self.passed).lower(), key, _cell(m), _cell(e), fmt(self.tolerance)])
        return rows


def _cell(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, bool) or v is None:
        return str(v).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return fmt(v)
    return json.dumps(v)


def reports_to_csv(reports: Sequence[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "passed", "quantity", "measured", "expected", "tolerance"])
    for rep in reports:
        w.writerows(rep.to_csv_rows())
    return buf.getvalue()


def describe(H: UniformHypergraph) -> str:
    return f"n={H.n},k={H.k},m={H.m}"


def _solve(kind: TensorKind, H: UniformHypergraph, cfg: SolverConfig) -> SpectralResult:
    if kind is TensorKind.LAPLACIAN:
        return laplacian_largest(H, cfg)
    return largest_h_eigenvalue(kind, H, cfg)


def scan_power(G: UniformHypergraph, k_max: int, kind="Q", cfg: SolverConfig = SolverConfig(), name: Optional[str] = None) -> ScanTable:
    """``lambda(T(G^k))`` for ``k = 2 .. k_max``.

    A row whose solve does not converge keeps its last enclosure and gets a
    flag; the scan carries on.
    """
    kind = TensorKind.parse(kind)
    if G.k != 2:
        raise hg.HypergraphError("scan needs an ordinary graph (k=2)")
    if k_max < 3:
        raise ValueError(f"k_max must be >= 3, got {k_max}")
    delta = G.max_degree
    if kind is TensorKind.SIGNLESS_LAPLACIAN and delta < 2:
        raise ValueError(f"scan of Q needs maximum degree >= 2, got {delta}")
    rows = []
    for k in range(2, k_max + 1):
        H, _ = hg.power(G, k)
        try:
            res = _solve(kind, H, cfg)
        except ConvergenceError as exc:
            res = exc.result
        rows.append(ScanRow(k, res.lam, res.lower, res.upper, res.iterations, list(res.flags)))
    margin = 10 * cfg.tol
    lams = [r.lam for r in rows]
    decreasing = all(a - b > margin for a, b in zip(lams, lams[1:]))
    target = float(delta) if kind is TensorKind.SIGNLESS_LAPLACIAN else 1.0
    gaps = [v - target for v in lams]
    ratios = [b / a if a else math.nan for a, b in zip(gaps, gaps[1:])]
    return ScanTable(
        base=name or describe(G),
        kind=kind.value,
        rows=rows,
        is_strictly_decreasing=decreasing,
        limit_target=target,
        final_gap=gaps[-1],
        above_limit=all(g > 0 for g in gaps),
        step_ratios=ratios,
        margin=margin,
    )


def scan_power_q(G: UniformHypergraph, k_max: int, cfg: SolverConfig = SolverConfig(), name: Optional[str] = None) -> ScanTable:
    return scan_power(G, k_max, TensorKind.SIGNLESS_LAPLACIAN, cfg, name)


def check_monotone_scan(G: UniformHypergraph, k_max: int, cfg: SolverConfig = SolverConfig(), name: Optional[str] = None) -> CheckReport:
    table = scan_power_q(G, k_max, cfg, name)
    ok = table.is_strictly_decreasing and table.above_limit and not any(r.flags for r in table.rows)
    return CheckReport(
        name=f"monotonicity[{table.base}]",
        passed=ok,
        measured={"lambda": [r.lam for r in table.rows], "final_gap": table.final_gap},
        expected={"limit": table.limit_target},
        tolerance=table.margin,
        notes=[f"step ratios {', '.join(fmt(r) for r in table.step_ratios)}"],
    )


def sandwich(G: UniformHypergraph, k: int, cfg: SolverConfig = SolverConfig()) -> tuple[float, float, float]:
    """``(sunflower bound, lambda(Q(G^k)), lambda(Q(F^k)))`` with ``F`` a regular supergraph of ``G``."""
    low = sunflower_q_lambda(G.max_degree, k).lam
    mid = largest_h_eigenvalue("Q", hg.power(G, k)[0], cfg).lam
    F = hg.regular_supergraph(G)
    high = largest_h_eigenvalue("Q", hg.power(F, k)[0], cfg).lam
    return low, mid, high


def check_power_adjacency(G: UniformHypergraph, k: int, s: int, cfg: SolverConfig = SolverConfig(), tol: float = 1e-7, lift_tol: float = 1e-8) -> CheckReport:
    """Compare a tensor solve on ``G^{k,s}`` with the matrix eigenvalue of ``G`` raised to ``2s/k``."""
    base = largest_h_eigenvalue("A", G, cfg)
    H, vmap = hg.generalized_power(G, k, s)
    direct = largest_h_eigenvalue("A", H, cfg)
    predicted = base.lam ** (2.0 * s / k)
    lifted, y = lift_adjacency_eigenpair(G, base.lam, base.eigenvector, k, s, vmap)
    lift_res = residual("A", H, lifted, y)
    diff = abs(direct.lam - predicted)
    return CheckReport(
        name=f"power-adjacency[{describe(G)},k={k},s={s}]",
        passed=diff < tol and lift_res < lift_tol,
        measured={"lambda_tensor": direct.lam, "lift_residual": lift_res},
        expected={"lambda_tensor": predicted, "lift_residual": 0.0},
        tolerance=tol,
        notes=[f"lambda(A(G)) = {fmt(base.lam)}"],
    )


def _undecomposed_upper(kind: TensorKind, H: UniformHypergraph, cfg: SolverConfig, settle: int = 5) -> float:
    """Power iteration on the whole (possibly reducible) tensor, tracking the max Collatz-Wielandt ratio.

    Coordinates of weaker components decay towards zero but their ratios are
    scale invariant, so the max ratio settles at the largest component value.
    """
    shift = cfg.shift if kind is TensorKind.ADJACENCY else 0.0
    k = H.k
    x = np.ones(H.n)
    prev = math.inf
    calm = 0
    upper = math.nan
    for _ in range(cfg.max_iter):
        live = x > 1e-200
        xk = x ** (k - 1)
        y = apply(kind, H, x) + shift * xk
        upper = float(np.max(y[live] / xk[live])) - shift
        calm = calm + 1 if abs(upper - prev) <= cfg.tol / 100 else 0
        if calm >= settle:
            break
        prev = upper
        x = y ** (1.0 / (k - 1))
        if x.max() == 0:
            break
        x /= x.max()
    return upper


def check_components(H: UniformHypergraph, kind="Q", cfg: SolverConfig = SolverConfig(), tol: float = 1e-8) -> CheckReport:
    """Union value against the max over separately solved components."""
    kind = TensorKind.parse(kind)
    parts = hg.components(H)
    per = [_solve(kind, C, cfg).lam if C.m else 0.0 for C, _ in parts]
    expected = max(per)
    union = _solve(kind, H, cfg)
    measured = {"lambda_union": union.lam, "union_residual": union.residual}
    ok = abs(union.lam - expected) < tol and union.residual < tol
    if kind is not TensorKind.LAPLACIAN:
        whole = _undecomposed_upper(kind, H, cfg)
        measured["lambda_undecomposed"] = whole
        ok = ok and abs(whole - expected) < tol
    return CheckReport(
        name=f"components[{describe(H)},{kind.value}]",
        passed=bool(ok),
        measured=measured,
        expected={"lambda_union": expected, "lambda_undecomposed": expected, "union_residual": 0.0},
        tolerance=tol,
        notes=[f"{len(parts)} components: " + ", ".join(fmt(v) for v in per)],
    )


def check_adjacency_power_decreasing(
    G: UniformHypergraph,
    s: int,
    k_range: Iterable[int],
    cfg: SolverConfig = SolverConfig(),
    cross_check_k: Optional[int] = None,
    tol: float = 1e-7,
) -> CheckReport:
    """``lambda(A(G))^(2s/k)`` over ``k``: strictly decreasing towards 1, one value checked by a tensor solve."""
    mu = largest_h_eigenvalue("A", G, cfg).lam
    ks = [k for k in k_range if (k == 2 and s == 1) or (k >= 3 and 2 * s <= k)]
    if not ks:
        raise ValueError("no valid (k, s) pairs in range")
    values = [mu ** (2.0 * s / k) for k in ks]
    notes = []
    measured: dict = {"values": values, "final_minus_one": values[-1] - 1.0}
    expected: dict = {"limit": 1.0}
    if G.max_degree < 2:
        notes.append("Δ < 2, corollary hypotheses unmet")
        return CheckReport(f"adjacency-power-decreasing[{describe(G)},s={s}]", True, measured, expected, tol, notes)
    decreasing = all(a > b for a, b in zip(values, values[1:]))
    above = all(v > 1.0 for v in values)
    ck = cross_check_k if cross_check_k is not None else next((k for k in ks if k >= 3), None)
    ok = decreasing and above
    if ck is not None:
        direct = largest_h_eigenvalue("A", hg.generalized_power(G, ck, s)[0], cfg).lam
        formula = mu ** (2.0 * s / ck)
        measured[f"tensor_k{ck}"] = direct
        expected[f"tensor_k{ck}"] = formula
        ok = ok and abs(direct - formula) < tol
    return CheckReport(f"adjacency-power-decreasing[{describe(G)},s={s}]", bool(ok), measured, expected, tol, notes)


def exhaustive_odd_bipartition(H: UniformHypergraph) -> Optional[tuple[bool, ...]]:
    """Brute-force search over all ``2^n`` vertex subsets (small ``n`` only)."""
    if H.m == 0:
        return tuple(v == 0 for v in range(H.n)) if H.n >= 2 else None
    for bits in product((False, True), repeat=H.n):
        if not any(bits) or all(bits):
            continue
        if all(sum(bits[v] for v in e) % 2 == 1 for e in H.edges):
            return bits
    return None


def check_odd_bipartite(H: UniformHypergraph, name: Optional[str] = None) -> CheckReport:
    """Parity elimination against exhaustive search."""
    part = hg.is_odd_bipartite(H)
    brute = exhaustive_odd_bipartition(H)
    valid = part is None or all(sum(part.side[v] for v in e) % 2 == 1 for e in H.edges)
    return CheckReport(
        name=f"odd-bipartite[{name or describe(H)}]",
        passed=bool(valid and (part is None) == (brute is None)),
        measured={"odd_bipartite": part is not None},
        expected={"odd_bipartite": brute is not None},
        tolerance=0.0,
    )


def remark_family(delta: int, cfg: SolverConfig = SolverConfig()) -> CheckReport:
    """A non-odd-bipartite union on which the Laplacian and signless Laplacian values still agree.

    ``G1`` is the complete 4-uniform hypergraph on 5 vertices, ``G2`` the
    sunflower of size ``delta``. Uses ``lambda(L(G1)) <= lambda(Q(G1))``
    without computing it.
    """
    G1 = hg.complete_kuniform(5, 4)
    q1 = largest_h_eigenvalue("Q", G1, cfg).lam
    if delta <= q1:
        raise ValueError(f"delta={delta} too small: need delta > lambda(Q(G1)) = {fmt(q1)}, i.e. delta >= {math.floor(q1) + 1}")
    G2 = hg.sunflower(delta, 4)
    q2 = largest_h_eigenvalue("Q", G2, cfg).lam
    l2 = laplacian_largest(G2, cfg).lam
    G = hg.disjoint_union(G1, G2)
    qg = largest_h_eigenvalue("Q", G, cfg).lam
    part = hg.is_odd_bipartite(G1)
    brute = exhaustive_odd_bipartition(G1)
    checks = {
        "g1_not_odd_bipartite": part is None and brute is None,
        "g1_below_g2": q1 < q2,
        "union_equals_g2": abs(qg - q2) < 1e-8,
        "g2_above_delta": q2 > delta,
        "g2_laplacian_equals_q": abs(l2 - q2) < 1e-8,
    }
    return CheckReport(
        name=f"remark[delta={delta}]",
        passed=all(checks.values()),
        measured={"lambda_Q_G1": q1, "lambda_Q_G2": q2, "lambda_L_G2": l2, "lambda_Q_G": qg, **checks},
        expected={"lambda_Q_G": q2, "lambda_L_G2": q2},
        tolerance=1e-8,
        notes=[
            "granting lambda(L(G1)) <= lambda(Q(G1)), lambda(L(G)) = lambda(L(G2)) = lambda(Q(G2)) = lambda(Q(G)) "
            "although G is not odd-bipartite"
        ],
    )


def graph_corpus() -> dict[str, UniformHypergraph]:
    return {
        "P3": hg.path(3),
        "P4": hg.path(4),
        "K3": hg.cycle(3),
        "C4": hg.cycle(4),
        "S2": hg.star(2),
        "S3": hg.star(3),
        "K4": hg.complete_graph(4),
    }


def hypergraph_corpus() -> dict[str, UniformHypergraph]:
    """Small connected hypergraphs used across the checks."""
    out = dict(graph_corpus())
    out.update({
        "S1^3": hg.sunflower(1, 3),
        "S2^3": hg.sunflower(2, 3),
        "S3^3": hg.sunflower(3, 3),
        "S1^4": hg.sunflower(1, 4),
        "S2^4": hg.sunflower(2, 4),
        "P3^3": hg.power(hg.path(3), 3)[0],
        "P4^3": hg.power(hg.path(4), 3)[0],
        "K3^3": hg.power(hg.cycle(3), 3)[0],
        "C4^3": hg.power(hg.cycle(4), 3)[0],
        "K4(3)": hg.complete_kuniform(4, 3),
        "K5(4)": hg.complete_kuniform(5, 4),
        "K3^{4,2}": hg.generalized_power(hg.cycle(3), 4, 2)[0],
    })
    return out


def random_unions(count: int, seed: int = 0) -> list[tuple[str, UniformHypergraph]]:
    """``count`` two-component unions of equal-uniformity corpus members."""
    corpus = hypergraph_corpus()
    names = sorted(corpus)
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        a, b = rng.choice(len(names), size=2)
        A, B = corpus[names[a]], corpus[names[b]]
        if A.k != B.k:
            continue
        out.append((f"{names[a]}+{names[b]}", hg.disjoint_union(A, B)))
    return out


SUITES = ("monotonicity", "power-adjacency", "components", "odd-bipartite", "remark")


def run_suite(name: str, cfg: SolverConfig = SolverConfig()) -> list[CheckReport]:
    """Run one named suite over the built-in corpus."""
    if name == "monotonicity":
        return [check_monotone_scan(G, 8, cfg, label) for label, G in graph_corpus().items()]
    if name == "power-adjacency":
        reports = []
        for label in ("P3", "K3", "S2", "C4"):
            G = graph_corpus()[label]
            for k in range(3, 7):
                for s in range(1, k // 2 + 1):
                    reports.append(check_power_adjacency(G, k, s, cfg))
        return reports
    if name == "components":
        reports = []
        for _, H in random_unions(10):
            reports.append(check_components(H, "A", cfg))
            reports.append(check_components(H, "Q", cfg))
        return reports
    if name == "odd-bipartite":
        return [check_odd_bipartite(H, label) for label, H in hypergraph_corpus().items() if H.k % 2 == 0 and H.n <= 12]
    if name == "remark":
        q1 = largest_h_eigenvalue("Q", hg.complete_kuniform(5, 4), cfg).lam
        return [remark_family(math.ceil(q1) + 1, cfg)]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
