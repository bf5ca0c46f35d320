"""Small undirected graphs and exhaustive independent sets."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

import networkx as nx

from ..models.errors import ParseError


@dataclass(frozen=True)
class Graph:
    """Vertices ``1..n``; edges stored as ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) outside vertices 1..{self.n}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        pairs = frozenset((min(u, v), max(u, v)) for u, v in edges)
        if n is None:
            n = max((v for _, v in pairs), default=0)
        return cls(n, pairs)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        adjacent = {v for u, v in self.edges if u == vertex}
        adjacent |= {u for u, v in self.edges if v == vertex}
        return tuple(sorted(adjacent))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def is_independent(self, subset: Iterable[int]) -> bool:
        chosen = set(subset)
        return not any(u in chosen and v in chosen for u, v in self.edges)


def load_graph(path: str | Path) -> Graph:
    """Read a 1-indexed edge list; a single-token line adds an isolated vertex.

    Raises:
        FileNotFoundError: ``path`` does not exist.
        ParseError: a line is not one or two vertex numbers.
    """
    path = Path(path)
    edges: list[tuple[int, int]] = []
    n = 0
    with path.open("r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            tokens = line.split("#", 1)[0].split()
            if not tokens:
                continue
            where = f"{path}:{lineno}"
            try:
                vertices = [int(tok) for tok in tokens[:2]]
            except ValueError as exc:
                raise ParseError(f"bad vertex in {line.strip()!r}", where) from exc
            if len(tokens) > 2 or min(vertices) < 1:
                raise ParseError(f"expected 'u v' with u, v >= 1, got {line.strip()!r}", where)
            if len(vertices) == 2:
                if vertices[0] == vertices[1]:
                    raise ParseError(f"self-loop at vertex {vertices[0]}", where)
                edges.append((vertices[0], vertices[1]))
            n = max(n, *vertices)
    return Graph.from_edges(edges, n)


def max_independent_set(g: Graph) -> frozenset[int]:
    """A maximum independent set, as a maximum clique of the complement."""
    if g.n == 0:
        return frozenset()
    clique, _ = nx.max_weight_clique(nx.complement(g.to_networkx()), weight=None)
    return frozenset(clique)


def independent_sets(g: Graph) -> Iterator[frozenset[int]]:
    """Every independent set, the empty one first, then by size."""
    yield frozenset()
    for clique in nx.enumerate_all_cliques(nx.complement(g.to_networkx())):
        yield frozenset(clique)
