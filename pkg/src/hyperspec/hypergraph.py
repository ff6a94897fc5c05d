"""Uniform hypergraphs: construction, validation, components and power constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input or invalid construction parameters."""


@dataclass(frozen=True)
class UniformHypergraph:
    """A k-uniform hypergraph on vertices ``0..n-1``.

    Edges are stored as sorted tuples, and the edge list itself is sorted
    lexicographically. Use :func:`build_hypergraph` rather than the
    constructor so input gets validated and canonicalized.
    """

    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """Edges as an ``(m, k)`` int array, canonical order."""
        return np.array(self.edges, dtype=np.intp).reshape(len(self.edges), self.k)

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array.ravel(), minlength=self.n).astype(np.int64)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:
        return f"UniformHypergraph(n={self.n}, k={self.k}, m={self.m})"


@dataclass(frozen=True)
class VertexPartition:
    """Two-sided vertex split; ``side[v]`` is True for members of the first side."""

    side: tuple[bool, ...]

    @property
    def first(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s]

    @property
    def second(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if not s]


@dataclass(frozen=True)
class PowerVertexMap:
    """Origin of every vertex of a (generalized) power hypergraph.

    ``vertex_blocks[v]`` lists the new ids blown up from base vertex ``v``;
    ``edge_blocks[i]`` lists the fresh ids padded into base edge ``i``
    (canonical edge order of the base graph).
    """

    vertex_blocks: tuple[tuple[int, ...], ...]
    edge_blocks: tuple[tuple[int, ...], ...]
    base_edges: tuple[tuple[int, int], ...] = field(default=())

    @property
    def size(self) -> int:
        return sum(map(len, self.vertex_blocks)) + sum(map(len, self.edge_blocks))


def build_hypergraph(n: int, k: int, edges: Iterable[Sequence[int]]) -> UniformHypergraph:
    """Validate and canonicalize a k-uniform hypergraph.

    Raises
    ------
    HypergraphError
        On a wrong edge size, a repeated vertex inside an edge, an out-of-range
        vertex id or a duplicate edge. The message names the offending edge
        index (position in the input list).
    """
    n = int(n)
    k = int(k)
    if n < 0:
        raise HypergraphError(f"vertex count must be nonnegative, got {n}")
    if k < 2:
        raise HypergraphError(f"uniformity must be at least 2, got {k}")
    seen: dict[tuple[int, ...], int] = {}
    for idx, raw in enumerate(edges):
        edge = [int(v) for v in raw]
        if len(edge) != k:
            raise HypergraphError(f"edge {idx} has {len(edge)} vertices, expected {k}")
        if len(set(edge)) != k:
            raise HypergraphError(f"repeated vertex in edge {idx}")
        for v in edge:
            if not 0 <= v < n:
                raise HypergraphError(f"vertex {v} out of range [0, {n}) in edge {idx}")
        key = tuple(sorted(edge))
        if key in seen:
            raise HypergraphError(f"duplicate edge {idx} (same as edge {seen[key]})")
        seen[key] = idx
    return UniformHypergraph(n=n, k=k, edges=tuple(sorted(seen)))


def relabel(H: UniformHypergraph, perm: Sequence[int]) -> UniformHypergraph:
    """Return the hypergraph with vertex ``v`` renamed to ``perm[v]``."""
    perm = list(perm)
    if sorted(perm) != list(range(H.n)):
        raise HypergraphError("relabeling must be a permutation of the vertex set")
    return build_hypergraph(H.n, H.k, [[perm[v] for v in e] for e in H.edges])


def disjoint_union(*parts: UniformHypergraph) -> UniformHypergraph:
    """Place hypergraphs of equal uniformity side by side, in argument order."""
    if not parts:
        raise HypergraphError("disjoint_union needs at least one hypergraph")
    k = parts[0].k
    if any(p.k != k for p in parts):
        raise HypergraphError("disjoint_union requires equal uniformity")
    offset = 0
    edges = []
    for p in parts:
        edges.extend([v + offset for v in e] for e in p.edges)
        offset += p.n
    return build_hypergraph(offset, k, edges)


def induced_subhypergraph(H: UniformHypergraph, vertices: Sequence[int]) -> UniformHypergraph:
    """Edges of ``H`` lying entirely inside ``vertices``, relabeled by position."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [[index[v] for v in e] for e in H.edges if all(v in index for v in e)]
    return build_hypergraph(len(index), H.k, edges)


def remove_edge(H: UniformHypergraph, i: int) -> UniformHypergraph:
    edges = [e for j, e in enumerate(H.edges) if j != i]
    return build_hypergraph(H.n, H.k, edges)


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins so representatives are stable
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def components(H: UniformHypergraph) -> list[tuple[UniformHypergraph, np.ndarray]]:
    """Split ``H`` into maximal connected sub-hypergraphs.

    Returns ``(component, back_map)`` pairs ordered by smallest original
    vertex; ``back_map[i]`` is the id in ``H`` of local vertex ``i``.
    Isolated vertices come back as single-vertex, edgeless components.
    """
    dsu = _DisjointSet(H.n)
    for e in H.edges:
        for v in e[1:]:
            dsu.union(e[0], v)
    groups: dict[int, list[int]] = {}
    for v in range(H.n):
        groups.setdefault(dsu.find(v), []).append(v)
    out = []
    for members in sorted(groups.values(), key=lambda g: g[0]):
        out.append((induced_subhypergraph(H, members), np.array(members, dtype=np.intp)))
    return out


def is_connected(H: UniformHypergraph) -> bool:
    return H.n > 0 and len(components(H)) == 1


def _require_graph(G: UniformHypergraph, what: str) -> None:
    if G.k != 2:
        raise HypergraphError(f"{what} needs an ordinary graph (k=2), got k={G.k}")


def generalized_power(G: UniformHypergraph, k: int, s: int) -> tuple[UniformHypergraph, PowerVertexMap]:
    """Blow each vertex of ``G`` up to ``s`` copies and pad each edge with ``k - 2s`` fresh vertices.

    Base vertex ``v`` becomes ids ``v*s .. v*s+s-1``; base edge ``i`` gets
    ``n*s + i*(k-2s) ..``. With ``s = 1`` the labeling coincides with :func:`power`.
    """
    _require_graph(G, "generalized_power")
    if k < 3:
        raise HypergraphError(f"generalized power needs k >= 3, got {k}")
    if not 1 <= s <= k // 2:
        raise HypergraphError(f"s must satisfy 1 <= s <= k/2, got s={s}, k={k}")
    return _blow_up(G, k, s)


def power(G: UniformHypergraph, k: int) -> tuple[UniformHypergraph, PowerVertexMap]:
    """kth power of an ordinary graph: pad every edge with ``k - 2`` fresh vertices."""
    _require_graph(G, "power")
    if k < 2:
        raise HypergraphError(f"target uniformity must be >= 2, got {k}")
    return _blow_up(G, k, 1)


def _blow_up(G: UniformHypergraph, k: int, s: int) -> tuple[UniformHypergraph, PowerVertexMap]:
    pad = k - 2 * s
    vblocks = tuple(tuple(range(v * s, v * s + s)) for v in range(G.n))
    base = s * G.n
    eblocks = tuple(tuple(range(base + i * pad, base + (i + 1) * pad)) for i in range(G.m))
    edges = [vblocks[u] + vblocks[v] + eblocks[i] for i, (u, v) in enumerate(G.edges)]
    H = build_hypergraph(base + pad * G.m, k, edges)
    return H, PowerVertexMap(vblocks, eblocks, tuple(G.edges))


def insert_pendant(H: UniformHypergraph) -> UniformHypergraph:
    """Add one new degree-one vertex to every edge; vertex ``n + i`` joins edge ``i``."""
    if H.m == 0:
        raise HypergraphError("insert_pendant needs at least one edge")
    edges = [e + (H.n + i,) for i, e in enumerate(H.edges)]
    return build_hypergraph(H.n + H.m, H.k + 1, edges)


def sunflower(d: int, k: int) -> UniformHypergraph:
    """Sunflower of size ``d``: heart 0, petal ``i`` on ids ``1+i(k-1) .. (i+1)(k-1)``."""
    if d < 1:
        raise HypergraphError(f"sunflower size must be >= 1, got {d}")
    if k < 2:
        raise HypergraphError(f"uniformity must be >= 2, got {k}")
    edges = [[0, *range(1 + i * (k - 1), 1 + (i + 1) * (k - 1))] for i in range(d)]
    return build_hypergraph(1 + d * (k - 1), k, edges)


def path(n: int) -> UniformHypergraph:
    if n < 2:
        raise HypergraphError(f"path needs n >= 2, got {n}")
    return build_hypergraph(n, 2, [[i, i + 1] for i in range(n - 1)])


def cycle(n: int) -> UniformHypergraph:
    if n < 3:
        raise HypergraphError(f"cycle needs n >= 3, got {n}")
    return build_hypergraph(n, 2, [[i, (i + 1) % n] for i in range(n)])


def star(d: int) -> UniformHypergraph:
    """Star with ``d`` edges; centre is vertex 0."""
    if d < 1:
        raise HypergraphError(f"star needs d >= 1, got {d}")
    return build_hypergraph(d + 1, 2, [[0, i] for i in range(1, d + 1)])


def complete_graph(n: int) -> UniformHypergraph:
    if n < 2:
        raise HypergraphError(f"complete graph needs n >= 2, got {n}")
    return complete_kuniform(n, 2)


def complete_kuniform(n: int, k: int) -> UniformHypergraph:
    """All k-subsets of ``range(n)``."""
    if k < 2 or n < k:
        raise HypergraphError(f"complete k-uniform hypergraph needs n >= k >= 2, got n={n}, k={k}")
    return build_hypergraph(n, k, combinations(range(n), k))


def is_odd_bipartite(H: UniformHypergraph) -> Optional[VertexPartition]:
    """Find a split where every edge meets the first side an odd number of times.

    Solves one parity equation per edge over GF(2) by Gauss-Jordan elimination
    on integer bitsets. Free variables are set to False, so the answer is
    deterministic. Returns None when no such split exists.
    """
    if H.k % 2:
        raise HypergraphError("odd-bipartiteness defined for even uniformity only")
    n = H.n
    if H.m == 0:
        if n < 2:
            return None
        return VertexPartition(tuple(v == 0 for v in range(n)))
    rhs = 1 << n
    rows = []
    for e in H.edges:
        r = rhs
        for v in e:
            r |= 1 << v
        rows.append(r)
    pivots: list[tuple[int, int]] = []  # (column, row index)
    rank = 0
    for col in range(n):
        bit = 1 << col
        pick = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if pick is None:
            continue
        rows[rank], rows[pick] = rows[pick], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        pivots.append((col, rank))
        rank += 1
    if any(r == rhs for r in rows[rank:]):
        return None
    side = [False] * n
    for col, i in pivots:
        side[col] = bool(rows[i] & rhs)
    return VertexPartition(tuple(side))


def regular_supergraph(G: UniformHypergraph) -> UniformHypergraph:
    """Embed ``G`` as the induced subgraph on vertices ``0..n-1`` of a max-degree-regular graph.

    Each round doubles the current graph and joins every degree-deficient
    vertex to its twin in the copy, which raises the minimum degree by one.
    """
    _require_graph(G, "regular_supergraph")
    delta = G.max_degree
    if delta < 1:
        raise HypergraphError("regular_supergraph needs at least one edge")
    F = G
    while int(F.degrees.min()) < delta:
        n = F.n
        edges = [list(e) for e in F.edges]
        edges += [[u + n, v + n] for u, v in F.edges]
        edges += [[v, v + n] for v in range(n) if F.degrees[v] < delta]
        F = build_hypergraph(2 * n, 2, edges)
    return F
