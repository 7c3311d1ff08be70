"""Seeded random graph families."""

from __future__ import annotations

import heapq
import random

from .graph import Graph, build_graph

KINDS = ("tree", "chordal", "interval", "connected")


def _relabel(n: int, edges: list[tuple[int, int]], rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return _relabel(n, edges, rng)


def random_chordal(n: int, seed: int, density: float = 0.5) -> Graph:
    """Random tree plus fill edges; reverse insertion order stays a perfect elimination order.

    Each new vertex joins a parent p and a random part of the clique p
    joined when it was inserted, so its earlier neighbors form a clique.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    joined: list[list[int]] = [[]]
    edges = []
    for i in range(1, n):
        p = rng.randrange(i)
        clique = [p] + [w for w in joined[p] if rng.random() < density]
        joined.append(clique)
        edges.extend((w, i) for w in clique)
    return _relabel(n, edges, rng)


def random_interval(n: int, seed: int, avg_degree: float = 20.0) -> Graph:
    """Connected interval graph with roughly ``avg_degree * n / 2`` edges.

    Left endpoints are uniform on [0, n); lengths are uniform around
    avg_degree / 2. A start beyond the current reach is pulled back onto it
    so the graph stays connected.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if avg_degree <= 0:
        raise ValueError("avg_degree must be positive")
    rng = random.Random(seed)
    half = avg_degree / 2.0
    starts = sorted(rng.uniform(0, n) for _ in range(n))
    intervals = []
    reach = None
    for s in starts:
        if reach is not None and s > reach:
            s = reach
        e = s + rng.uniform(0.5 * half, 1.5 * half)
        intervals.append((s, e))
        reach = e if reach is None else max(reach, e)
    edges = []
    active: list[tuple[float, int]] = []
    for i, (s, e) in enumerate(intervals):
        while active and active[0][0] < s:
            heapq.heappop(active)
        edges.extend((j, i) for _, j in active)
        heapq.heappush(active, (e, i))
    return _relabel(n, edges, rng)


def random_connected(n: int, seed: int, density: float = 0.3) -> Graph:
    """Random tree plus each remaining pair independently with probability ``density``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    tree = {(rng.randrange(i), i) for i in range(1, n)}
    edges = list(tree)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in tree and rng.random() < density:
                edges.append((i, j))
    return _relabel(n, edges, rng)


def generate(kind: str, n: int, seed: int, density: float | None = None) -> Graph:
    if kind == "tree":
        return random_tree(n, seed)
    if kind == "chordal":
        return random_chordal(n, seed, 0.5 if density is None else density)
    if kind == "interval":
        return random_interval(n, seed, 20.0 if density is None else density)
    if kind == "connected":
        return random_connected(n, seed, 0.3 if density is None else density)
    raise ValueError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
