"""Brute-force reference implementations, kept independent of the package internals."""

from __future__ import annotations

import itertools

from evcover.graph import Graph


def components_after_removal(G: Graph, removed: set[int]) -> int:
    left = [v for v in range(G.n) if v not in removed]
    seen = set()
    count = 0
    for s in left:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def brute_cut_vertices(G: Graph) -> set[int]:
    base = components_after_removal(G, set())
    return {v for v in range(G.n) if components_after_removal(G, {v}) > base}


def brute_forced_cover(G: Graph, X=()) -> tuple[int, tuple[int, ...]]:
    """Smallest cover containing X; lexicographically first among ties."""
    X = set(X)
    for size in range(G.n + 1):
        for S in itertools.combinations(range(G.n), size):
            s = set(S)
            if X <= s and all(u in s or v in s for u, v in G.edges):
                return size, S
    raise AssertionError("unreachable")


def guard_moves(G: Graph, counts):
    """Every way to move the guards one step: yields (next_counts, crossed edge set)."""
    guards = [v for v, c in enumerate(counts) for _ in range(c)]
    options = [(v, *G.adj[v]) for v in guards]
    for targets in itertools.product(*options):
        nxt = [0] * G.n
        crossed = set()
        for src, dst in zip(guards, targets):
            nxt[dst] += 1
            if src != dst:
                crossed.add((min(src, dst), max(src, dst)))
        yield tuple(nxt), crossed


def all_configs(n: int, k: int, single: bool):
    for vec in itertools.product(range(k + 1), repeat=n):
        if sum(vec) == k and (not single or max(vec, default=0) <= 1):
            yield vec


def brute_class(G: Graph, k: int, single: bool = False, forced=()) -> set[tuple[int, ...]]:
    """Naive greatest fixpoint over every k-guard configuration (no cover pruning)."""
    forced = set(forced)
    alive = {c for c in all_configs(G.n, k, single) if all(c[v] for v in forced)}
    moves = {c: list(guard_moves(G, c)) for c in alive}
    edges = sorted(G.edges)
    while True:
        dead = set()
        for c in alive:
            for e in edges:
                if not any(e in crossed and nxt in alive for nxt, crossed in moves[c]):
                    dead.add(c)
                    break
        if not dead:
            return alive
        alive -= dead


def brute_evc(G: Graph, single: bool = False, forced=()) -> int:
    for k in range(G.n + 1):
        if brute_class(G, k, single, forced):
            return k
    raise AssertionError("unreachable")


def min_connected_cover(G: Graph, X=()) -> int:
    """Smallest vertex cover containing X that induces a connected subgraph."""
    X = set(X)
    for size in range(1, G.n + 1):
        for S in itertools.combinations(range(G.n), size):
            s = set(S)
            if not X <= s or not all(u in s or v in s for u, v in G.edges):
                continue
            if components_after_removal(G, set(range(G.n)) - s) == 1:
                return size
    raise AssertionError("unreachable")
