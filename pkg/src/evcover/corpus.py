"""Named, reproducible graph corpora.

Spec grammar::

    all-connected-n<N>                         every connected graph on 1..N vertices (N <= 7)
    all-chordal-n<N>                           the connected chordal ones among those
    random-<kind>-n<N>-c<count>-s<seed>[-cut]  seeded instances, sizes drawn from 2..N;
                                               ``-cut`` keeps only graphs with a cut vertex
    triples-n<N>-c<count>-s<seed>              (G', x, H, h) gluing fixtures, |V(G)| <= N
    chordal-n<N>-c<count>-s<seed>              all-chordal-n7 topped up with seeded n=N graphs
"""

from __future__ import annotations

import functools
import random
import re
from dataclasses import dataclass

from .cover import is_chordal
from .decomposition import attach_extension, cut_vertices
from .generators import KINDS, generate, random_chordal
from .graph import Graph, build_graph, is_connected


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Triple:
    g_prime: Graph
    x: int
    extension: Graph


@functools.lru_cache(maxsize=None)
def atlas_connected(max_n: int) -> tuple[Graph, ...]:
    if not 1 <= max_n <= 7:
        raise CorpusError("the exhaustive corpus covers 1..7 vertices")
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() > max_n:
            break
        G = build_graph(g.number_of_nodes(), g.edges())
        if is_connected(G):
            out.append(G)
    return tuple(out)


def atlas_chordal(max_n: int) -> tuple[Graph, ...]:
    return tuple(G for G in atlas_connected(max_n) if is_chordal(G) is not None)


def random_graphs(kind: str, max_n: int, count: int, seed: int, need_cut: bool = False) -> list[Graph]:
    if kind not in KINDS:
        raise CorpusError(f"unknown kind {kind!r}")
    lo = 3 if need_cut else 2
    if max_n < lo:
        raise CorpusError(f"n must be at least {lo}")
    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * count + 1000:
            raise CorpusError("could not draw enough graphs with a cut vertex")
        n = rng.randint(lo, max_n)
        if kind == "tree":
            density = None
        elif kind == "interval":
            density = rng.uniform(1.0, 4.0)
        else:
            density = rng.uniform(0.1, 0.7)
        G = generate(kind, n, rng.randrange(2**31), density)
        if need_cut and not cut_vertices(G):
            continue
        out.append(G)
    return out


def random_triples(max_n: int, count: int, seed: int) -> list[Triple]:
    """G' of 2..5 vertices glued at x to a connected H so that |V(G)| <= max_n."""
    if max_n < 3:
        raise CorpusError("triples need at least 3 vertices")
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n_prime = rng.randint(2, min(5, max_n - 1))
        n_h = rng.randint(2, max_n - n_prime + 1)
        kind_g = rng.choice(("connected", "chordal", "tree"))
        kind_h = rng.choice(("connected", "chordal", "tree"))
        Gp = generate(kind_g, n_prime, rng.randrange(2**31), None if kind_g == "tree" else rng.uniform(0.2, 0.8))
        H = generate(kind_h, n_h, rng.randrange(2**31), None if kind_h == "tree" else rng.uniform(0.2, 0.8))
        x = rng.randrange(n_prime)
        h = rng.randrange(n_h)
        out.append(Triple(Gp, x, attach_extension(Gp, x, H, h)))
    return out


def parse_corpus(spec: str) -> list:
    """Instances named by ``spec``: graphs, or Triples for ``triples-...``."""
    m = re.fullmatch(r"all-(connected|chordal)-n(\d+)", spec)
    if m:
        n = int(m.group(2))
        return list(atlas_connected(n) if m.group(1) == "connected" else atlas_chordal(n))
    m = re.fullmatch(r"random-(\w+)-n(\d+)-c(\d+)-s(\d+)(-cut)?", spec)
    if m:
        return random_graphs(m.group(1), int(m.group(2)), int(m.group(3)), int(m.group(4)), bool(m.group(5)))
    m = re.fullmatch(r"triples-n(\d+)-c(\d+)-s(\d+)", spec)
    if m:
        return random_triples(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    m = re.fullmatch(r"chordal-n(\d+)-c(\d+)-s(\d+)", spec)
    if m:
        n, count, seed = (int(g) for g in m.groups())
        base = list(atlas_chordal(min(n, 7)))
        rng = random.Random(seed)
        extra = []
        if n > 7:
            extra = [
                random_chordal(n, rng.randrange(2**31), rng.uniform(0.1, 0.9))
                for _ in range(max(0, count - len(base)))
            ]
        return base + extra
    raise CorpusError(f"unrecognized corpus spec {spec!r}")


DEFAULT_CORPUS = {
    "lemma1": "random-connected-n12-c200-s1-cut",
    "lemma2": "random-connected-n12-c200-s1-cut",
    "theorem1": "all-connected-n7",
    "obs1": "all-connected-n7",
    "corollary2": "all-connected-n7",
    "chordal": "chordal-n8-c500-s1",
    "cutprop": "triples-n9-c50-s1",
}
