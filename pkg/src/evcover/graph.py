"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph construction input."""


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_cover(self, cover: Iterable[int]) -> bool:
        s = set(cover)
        return all(u in s or v in s for u, v in self.edges)


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a normalized graph; reject loops, duplicates and bad endpoints."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    edges: set[Edge] = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        e = _norm(u, v)
        if e in edges:
            raise GraphError(f"edge ({u}, {v}) is a duplicate")
        edges.add(e)
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, frozenset(edges), tuple(tuple(sorted(a)) for a in nbrs))


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``S``; ids are renumbered in increasing order.

    Returns the subgraph and the old->new id mapping.
    """
    verts = sorted(set(S))
    for v in verts:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} is outside 0..{G.n - 1}")
    mapping = {v: i for i, v in enumerate(verts)}
    sub_edges = [
        (mapping[u], mapping[w])
        for u in verts
        for w in G.adj[u]
        if u < w and w in mapping
    ]
    return build_graph(len(verts), sub_edges), mapping


def remove_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = set(S)
    return induced_subgraph(G, (v for v in range(G.n) if v not in drop))


def connected_components(G: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    seen = [False] * G.n
    parts = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, part = [s], [s]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    part.append(w)
        parts.append(sorted(part))
    return parts


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(connected_components(G)) == 1


# Named fixtures used throughout tests and docs.

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bowtie() -> Graph:
    """Triangles (0,1,2) and (0,3,4) sharing vertex 0."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
