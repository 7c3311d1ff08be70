"""Exact eternal vertex cover by greatest-fixpoint over guard configurations.

A configuration is a count vector over vertices. From configuration ``c``
an attack on edge ``{a, b}`` is answered by moving every guard to a closed
neighbor so that at least one guard crosses the attacked edge. Pre-routing
that crossing guard reduces the question to plain one-step reachability
between (k-1)-guard vectors, which is what both the flow check and the
successor enumeration below exploit.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cover import mvc_exact, mvc_forced
from .graph import Edge, Graph


class OccupancyModel(str, enum.Enum):
    MULTI = "multi"
    SINGLE = "single"


@dataclass(frozen=True, order=True)
class GuardConfig:
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def occupied(self) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.counts) if c)

    def guards_on(self, vertices: Iterable[int]) -> int:
        return sum(self.counts[v] for v in vertices)

    def as_dict(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.counts) if c}

    @classmethod
    def from_dict(cls, n: int, counts: dict[int, int]) -> "GuardConfig":
        vec = [0] * n
        for v, c in counts.items():
            vec[v] = c
        return cls(tuple(vec))


@dataclass(frozen=True)
class ConfigClass:
    k: int
    configs: tuple[GuardConfig, ...]
    model: OccupancyModel = OccupancyModel.MULTI
    forced: frozenset[int] = field(default_factory=frozenset)

    def __bool__(self) -> bool:
        return bool(self.configs)

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self):
        return iter(self.configs)


def _check_model(c: GuardConfig, model: OccupancyModel) -> None:
    if any(x < 0 for x in c.counts):
        raise ValueError(f"negative guard count in {c.counts}")
    if model == OccupancyModel.SINGLE and any(x > 1 for x in c.counts):
        raise ValueError(f"{c.counts} stacks guards under the single model")


def enumerate_configs(
    G: Graph,
    k: int,
    model: OccupancyModel = OccupancyModel.MULTI,
    forced: Iterable[int] = (),
    covers_only: bool = True,
) -> list[GuardConfig]:
    """All k-guard configurations, in lexicographic order of count vectors.

    With ``covers_only`` (the default) configurations whose occupied set is
    not a vertex cover are dropped; they can never survive an attack on an
    uncovered edge.
    """
    if k < 0:
        raise ValueError("guard count must be non-negative")
    model = OccupancyModel(model)
    forced = frozenset(forced)
    n = G.n
    if model == OccupancyModel.SINGLE:
        placements = itertools.combinations(range(n), k)
    else:
        placements = itertools.combinations_with_replacement(range(n), k)
    out = []
    edges = G.sorted_edges()
    for placement in placements:
        vec = [0] * n
        for v in placement:
            vec[v] += 1
        if any(not vec[v] for v in forced):
            continue
        if covers_only and any(not vec[u] and not vec[w] for u, w in edges):
            continue
        out.append(GuardConfig(tuple(vec)))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# one-round defence: flow formulation and brute-force oracle


def _max_flow(cap: list[dict[int, int]], s: int, t: int) -> int:
    flow = 0
    while True:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if t not in parent:
            return flow
        push = None
        w = t
        while w != s:
            u = parent[w]
            push = cap[u][w] if push is None else min(push, cap[u][w])
            w = u
        w = t
        while w != s:
            u = parent[w]
            cap[u][w] -= push
            cap[w][u] = cap[w].get(u, 0) + push
            w = u
        flow += push


def transport_feasible(G: Graph, supply: Sequence[int], demand: Sequence[int]) -> bool:
    """Can guards at ``supply`` reach ``demand`` moving at most one step each?"""
    total = sum(supply)
    if total != sum(demand):
        return False
    if total == 0:
        return True
    n = G.n
    s, t = 2 * n, 2 * n + 1
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n + 2)]
    big = total
    for u in range(n):
        if supply[u]:
            cap[s][u] = supply[u]
            cap[u][n + u] = big
            for w in G.adj[u]:
                cap[u][n + w] = big
        if demand[u]:
            cap[n + u][t] = demand[u]
    return _max_flow(cap, s, t) == total


def _crossing_feasible(G: Graph, c: Sequence[int], a: int, b: int, c_next: Sequence[int]) -> bool:
    if not c[a] or not c_next[b]:
        return False
    supply = list(c)
    demand = list(c_next)
    supply[a] -= 1
    demand[b] -= 1
    return transport_feasible(G, supply, demand)


def _move_outcomes(G: Graph, c: Sequence[int]) -> dict[tuple[int, ...], set[Edge]]:
    """Every move matrix from c: resulting vector -> edges crossed by some matrix."""
    n = G.n
    per_vertex = []
    for u in range(n):
        targets = (u, *G.adj[u])
        splits = []
        for combo in itertools.combinations_with_replacement(targets, c[u]):
            splits.append([(u, w) for w in combo])
        per_vertex.append(splits)
    out: dict[tuple[int, ...], set[Edge]] = {}
    for choice in itertools.product(*per_vertex):
        vec = [0] * n
        crossed = set()
        for moves in choice:
            for u, w in moves:
                vec[w] += 1
                if u != w:
                    crossed.add((u, w) if u < w else (w, u))
        out.setdefault(tuple(vec), set()).update(crossed)
    return out


def defendable(
    G: Graph,
    c: GuardConfig,
    e: Edge,
    c_next: GuardConfig,
    model: OccupancyModel = OccupancyModel.MULTI,
    method: str = "flow",
) -> bool:
    """Can the defender answer an attack on ``e`` by moving from c to c_next?

    ``method="enumerate"`` walks every move matrix instead of running the
    two flow checks; it is exponential and only meant as a cross-check.
    """
    if c.total != c_next.total:
        raise ValueError(f"guard totals differ: {c.total} vs {c_next.total}")
    model = OccupancyModel(model)
    _check_model(c, model)
    _check_model(c_next, model)
    a, b = e
    if not G.has_edge(a, b):
        raise ValueError(f"{e} is not an edge")
    if method == "enumerate":
        key = (a, b) if a < b else (b, a)
        return key in _move_outcomes(G, c.counts).get(c_next.counts, ())
    if method != "flow":
        raise ValueError(f"unknown method {method!r}")
    return _crossing_feasible(G, c.counts, a, b, c_next.counts) or _crossing_feasible(
        G, c.counts, b, a, c_next.counts
    )


# ---------------------------------------------------------------------------
# greatest fixpoint


class _SuccessorIndex:
    """Successor bitmasks over a fixed configuration universe.

    Vectors are packed as integers in base k+1 so that adding a guard at
    vertex b is adding ``base**b``.
    """

    def __init__(self, G: Graph, k: int, universe: Sequence[GuardConfig]):
        self.G = G
        self.base = k + 1
        self.power = [self.base**v for v in range(G.n)]
        self.index = {self.pack(c.counts): i for i, c in enumerate(universe)}
        self._spread: dict[tuple[int, int], list[int]] = {}
        self._reach: dict[int, list[int]] = {}
        self._mask: dict[tuple[int, int], int] = {}

    def pack(self, vec: Sequence[int]) -> int:
        return sum(x * p for x, p in zip(vec, self.power))

    def spread(self, v: int, count: int) -> list[int]:
        key = (v, count)
        got = self._spread.get(key)
        if got is None:
            targets = [self.power[w] for w in (v, *self.G.adj[v])]
            got = sorted({sum(combo) for combo in itertools.combinations_with_replacement(targets, count)})
            self._spread[key] = got
        return got

    def reach(self, vec: Sequence[int]) -> list[int]:
        """Packed vectors reachable from ``vec`` in one unconstrained step."""
        key = self.pack(vec)
        got = self._reach.get(key)
        if got is None:
            states = [0]
            for v, count in enumerate(vec):
                if count:
                    add = self.spread(v, count)
                    states = list({s + d for s in states for d in add})
            self._reach[key] = got = states
        return got

    def mask(self, vec: Sequence[int], b: int) -> int:
        key = (self.pack(vec), b)
        got = self._mask.get(key)
        if got is None:
            pb = self.power[b]
            index = self.index
            got = 0
            for s in self.reach(vec):
                i = index.get(s + pb)
                if i is not None:
                    got |= 1 << i
            self._mask[key] = got
        return got

    def successors(self, c: Sequence[int], a: int, b: int) -> int:
        """Universe members reachable from c while defending an attack on {a, b}."""
        out = 0
        for src, dst in ((a, b), (b, a)):
            if c[src]:
                r = list(c)
                r[src] -= 1
                out |= self.mask(r, dst)
        return out


def successor_masks(G: Graph, k: int, universe: Sequence[GuardConfig]) -> list[list[int]]:
    """Per configuration, per sorted edge: bitmask of defending successors in the universe."""
    idx = _SuccessorIndex(G, k, universe)
    edges = G.sorted_edges()
    return [[idx.successors(c.counts, a, b) for a, b in edges] for c in universe]


def greatest_fixpoint(succ: Sequence[Sequence[int]]) -> int:
    """Largest index set S with every per-edge successor mask meeting S."""
    alive = (1 << len(succ)) - 1
    pending = list(range(len(succ)))
    while pending:
        dead = [i for i in pending if any(not m & alive for m in succ[i])]
        if not dead:
            break
        for i in dead:
            alive &= ~(1 << i)
        gone = 0
        for i in dead:
            gone |= 1 << i
        # only members with a successor among the dead can fail next round
        pending = [
            i
            for i in range(len(succ))
            if alive >> i & 1 and any(m & gone for m in succ[i])
        ]
    return alive


def evc_class(
    G: Graph,
    k: int,
    model: OccupancyModel = OccupancyModel.MULTI,
    forced: Iterable[int] = (),
    covers_only: bool = True,
) -> ConfigClass:
    """The maximal eternal vertex cover class with k guards (empty if none)."""
    model = OccupancyModel(model)
    forced = frozenset(forced)
    universe = enumerate_configs(G, k, model, forced, covers_only=covers_only)
    alive = greatest_fixpoint(successor_masks(G, k, universe))
    configs = tuple(c for i, c in enumerate(universe) if alive >> i & 1)
    return ConfigClass(k, configs, model, forced)


def _first_winning(
    G: Graph, lo: int, model: OccupancyModel, forced: frozenset[int]
) -> ConfigClass:
    # all-vertices-occupied defends any attack by swapping along it
    for k in range(lo, G.n + 1):
        cls = evc_class(G, k, model, forced)
        if cls:
            return cls
    raise AssertionError("no winning guard count up to n")


def evc_exact(G: Graph, model: OccupancyModel = OccupancyModel.MULTI) -> tuple[int, ConfigClass]:
    """Eternal vertex cover number and the maximal class attaining it.

    Guard counts are tried upward from mvc(G); the single model is not known
    to be monotone in k, so no bisection.
    """
    model = OccupancyModel(model)
    cls = _first_winning(G, mvc_exact(G).size, model, frozenset())
    return cls.k, cls


def evc_forced(G: Graph, S: Iterable[int], model: OccupancyModel = OccupancyModel.MULTI) -> int:
    """Fewest guards with a class keeping every vertex of S occupied."""
    model = OccupancyModel(model)
    S = frozenset(S)
    return _first_winning(G, mvc_forced(G, S).size, model, S).k


def is_closed(G: Graph, configs: Iterable[GuardConfig], model: OccupancyModel = OccupancyModel.MULTI) -> bool:
    """Direct re-check of closure with the flow test (slow; for validation)."""
    configs = list(configs)
    for c in configs:
        for e in G.sorted_edges():
            if not any(defendable(G, c, e, d, model) for d in configs):
                return False
    return True
