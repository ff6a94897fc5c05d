"""Reading and writing hypergraphs as JSON or plain edge-list text."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .hypergraph import HypergraphError, UniformHypergraph, build_hypergraph


def parse_hypergraph(text: str) -> UniformHypergraph:
    """Parse either ``{"k": .., "n": .., "edges": [..]}`` or text with a ``k n`` header line."""
    stripped = text.strip()
    if not stripped:
        raise HypergraphError("empty hypergraph input")
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"invalid JSON: {exc}") from None
        missing = {"k", "n", "edges"} - set(data)
        if missing:
            raise HypergraphError(f"hypergraph JSON missing keys: {sorted(missing)}")
        return build_hypergraph(data["n"], data["k"], data["edges"])
    lines = [ln.split("#", 1)[0].split() for ln in stripped.splitlines()]
    lines = [ln for ln in lines if ln]
    try:
        k, n = (int(t) for t in lines[0])
        edges = [[int(t) for t in ln] for ln in lines[1:]]
    except ValueError:
        raise HypergraphError("text format needs a 'k n' header and integer edge lines") from None
    return build_hypergraph(n, k, edges)


def read_hypergraph(source: str | Path) -> UniformHypergraph:
    """Load from a path; ``-`` reads stdin."""
    if str(source) == "-":
        return parse_hypergraph(sys.stdin.read())
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise HypergraphError(f"cannot read {source}: {exc.strerror}") from None
    return parse_hypergraph(text)


def dumps_hypergraph(H: UniformHypergraph) -> str:
    return json.dumps(H.to_dict())


def dumps_text(H: UniformHypergraph) -> str:
    lines = [f"{H.k} {H.n}"] + [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"
