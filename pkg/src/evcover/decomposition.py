"""Cut vertices, blocks, x-components and B-components."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Edge, Graph, GraphError, build_graph, connected_components, induced_subgraph


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class BlockCutStructure:
    cut_vertices: frozenset[int]
    blocks: tuple[frozenset[int], ...]
    block_of_edge: dict[Edge, int]

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def cut_vertices_in(self, vertices: Iterable[int]) -> frozenset[int]:
        return self.cut_vertices.intersection(vertices)


@dataclass(frozen=True)
class ComponentPiece:
    """An induced piece of a parent graph hanging off ``attach_vertex``.

    ``id_map`` sends parent ids to piece ids.
    """

    subgraph: Graph
    attach_vertex: int
    id_map: dict[int, int]

    @property
    def parent_vertices(self) -> frozenset[int]:
        return frozenset(self.id_map)

    def parent_edges(self) -> set[Edge]:
        inv = {new: old for old, new in self.id_map.items()}
        return {tuple(sorted((inv[u], inv[v]))) for u, v in self.subgraph.edges}


def block_cut_structure(G: Graph) -> BlockCutStructure:
    """Hopcroft-Tarjan biconnected components, iterative so deep paths are fine."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    blocks: list[frozenset[int]] = []
    block_of_edge: dict[Edge, int] = {}
    timer = 0
    edge_stack: list[Edge] = []

    def pop_block(u: int, w: int) -> None:
        verts = set()
        idx = len(blocks)
        while True:
            a, b = edge_stack.pop()
            verts.add(a)
            verts.add(b)
            block_of_edge[(a, b) if a < b else (b, a)] = idx
            if (a, b) == (u, w):
                break
        blocks.append(frozenset(verts))

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, next neighbor index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            u, parent, i = frame
            nbrs = G.adj[u]
            if i < len(nbrs):
                frame[2] = i + 1
                w = nbrs[i]
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append([w, u, 0])
                elif w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            else:
                stack.pop()
                if parent == -1:
                    continue
                if low[u] < low[parent]:
                    low[parent] = low[u]
                if low[u] >= disc[parent]:
                    if parent != root:
                        cut.add(parent)
                    pop_block(parent, u)
        if root_children > 1:
            cut.add(root)
    return BlockCutStructure(frozenset(cut), tuple(blocks), block_of_edge)


def cut_vertices(G: Graph) -> frozenset[int]:
    return block_cut_structure(G).cut_vertices


def _pieces(G: Graph, x: int, parts: list[list[int]]) -> list[ComponentPiece]:
    out = []
    for part in parts:
        sub, mapping = induced_subgraph(G, [*part, x])
        out.append(ComponentPiece(sub, x, mapping))
    return out


def _components_without(G: Graph, x: int) -> list[list[int]]:
    rest, mapping = induced_subgraph(G, (v for v in range(G.n) if v != x))
    inv = {new: old for old, new in mapping.items()}
    return [sorted(inv[v] for v in part) for part in connected_components(rest)]


def x_components(G: Graph, x: int) -> list[ComponentPiece]:
    """One piece per component H of G - x, induced on V(H) + {x}."""
    if not 0 <= x < G.n:
        raise DecompositionError(f"vertex {x} is outside 0..{G.n - 1}")
    if x not in cut_vertices(G):
        raise DecompositionError(f"vertex {x} is not a cut vertex")
    return _pieces(G, x, _components_without(G, x))


def b_components(
    G: Graph, B: Iterable[int], structure: BlockCutStructure | None = None
) -> list[ComponentPiece]:
    """x-components over cut vertices x of block B that share no edge with B."""
    structure = structure or block_cut_structure(G)
    block = frozenset(B)
    if block not in structure.blocks:
        raise DecompositionError(f"{sorted(block)} is not a block")
    block_edges = {e for e in G.edges if e[0] in block and e[1] in block}
    out = []
    for x in sorted(structure.cut_vertices & block):
        for piece in _pieces(G, x, _components_without(G, x)):
            if not piece.parent_edges() & block_edges:
                out.append(piece)
    return out


def attach_extension(G_prime: Graph, x: int, H: Graph, h: int) -> Graph:
    """Glue H onto G' by identifying h with x.

    G' keeps ids 0..n'-1; the other vertices of H follow in increasing order.
    """
    if not 0 <= x < G_prime.n:
        raise DecompositionError(f"vertex {x} is outside G'")
    if not 0 <= h < H.n:
        raise DecompositionError(f"vertex {h} is outside H")
    if H.n < 2 or len(connected_components(H)) != 1:
        raise DecompositionError("H must be connected with at least two vertices")
    if G_prime.n < 2:
        raise DecompositionError("G' needs at least two vertices for x to become a cut vertex")
    base = G_prime.n
    ids = {v: (x if v == h else base + (v if v < h else v - 1)) for v in range(H.n)}
    edges = list(G_prime.edges) + [(ids[u], ids[v]) for u, v in H.edges]
    return build_graph(base + H.n - 1, edges)


def is_x_extension(G: Graph, G_prime: Graph, x: int) -> bool:
    """True if G extends G' (on ids 0..n'-1) through the single vertex x.

    G' may itself be a union of x-components of G; what matters is that G'
    sits induced in G, x separates it from a non-empty remainder, and nothing
    else touches it.
    """
    k = G_prime.n
    if not 0 <= x < k or G.n <= k:
        return False
    try:
        sub, _ = induced_subgraph(G, range(k))
    except GraphError:
        return False
    if sub.edges != G_prime.edges:
        return False
    for u, v in G.edges:
        if (u < k) != (v < k) and x not in (u, v):
            return False
    return x in cut_vertices(G)


def is_locally_connected(G: Graph) -> bool:
    """Every open neighborhood induces a connected subgraph.

    A one-vertex neighborhood is connected; an empty one is not, except in
    the one-vertex graph.
    """
    if G.n == 1:
        return True
    nbr_sets = [set(a) for a in G.adj]
    for v in range(G.n):
        nbrs = G.adj[v]
        if not nbrs:
            return False
        seen = {nbrs[0]}
        stack = [nbrs[0]]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if w in nbr_sets[v] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(nbrs):
            return False
    return True


def blocks_locally_connected(G: Graph, structure: BlockCutStructure | None = None) -> bool:
    structure = structure or block_cut_structure(G)
    return all(is_locally_connected(induced_subgraph(G, b)[0]) for b in structure.blocks)
