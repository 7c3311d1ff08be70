import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evcover.corpus import atlas_chordal
from evcover.cover import (
    CoverError,
    chordal_mvc,
    chordal_mvc_forced,
    is_chordal,
    is_perfect_elimination_order,
    mvc_exact,
    mvc_forced,
)
from evcover.generators import random_chordal, random_connected
from evcover.graph import build_graph, complete_graph, cycle_graph, path_graph, star_graph

from oracles import brute_forced_cover
from strategies import chordal_graphs, graphs


def _check(G, res, forced=()):
    assert G.is_cover(res.witness)
    assert len(res.witness) == res.size
    assert set(forced) <= res.witness


def test_mvc_examples(C4):
    assert mvc_exact(complete_graph(2)).size == 1
    assert mvc_exact(C4).size == brute_forced_cover(C4)[0] == 2
    res = mvc_exact(star_graph(3))
    assert (res.size, res.witness) == (1, {0})
    assert mvc_exact(build_graph(4, [])).size == 0


def test_forced_examples(P3, BOWTIE):
    assert mvc_forced(P3, {1}).size == 1
    res = mvc_forced(P3, {0})
    assert (res.size, res.witness) == (2, {0, 1})
    assert mvc_forced(BOWTIE, {0}).size == brute_forced_cover(BOWTIE, {0})[0] == 3


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_exact_matches_enumeration_with_lex_tiebreak(G):
    res = mvc_exact(G)
    size, first = brute_forced_cover(G)
    assert res.size == size
    assert tuple(sorted(res.witness)) == first


@settings(max_examples=100)
@given(graphs(max_n=9, min_n=1), st.data())
def test_forced_matches_enumeration(G, data):
    X = data.draw(st.sets(st.integers(0, G.n - 1)))
    res = mvc_forced(G, X)
    size, first = brute_forced_cover(G, X)
    _check(G, res, X)
    assert res.size == size
    assert tuple(sorted(res.witness)) == first


def test_exact_handles_forty_vertices():
    G = random_connected(40, 5, 0.15)
    res = mvc_exact(G)
    _check(G, res)
    assert res.size == mvc_forced(G, ()).size


@given(graphs(max_n=9, min_n=1), st.data())
def test_forced_monotone(G, data):
    Y = data.draw(st.sets(st.integers(0, G.n - 1)))
    X = data.draw(st.sets(st.sampled_from(sorted(Y)))) if Y else set()
    a, b = mvc_forced(G, X).size, mvc_forced(G, Y).size
    assert a <= b <= a + len(Y - X)


@given(graphs(max_n=9, min_n=1))
def test_forced_empty_and_single_vertex(G):
    base = mvc_exact(G).size
    assert mvc_forced(G, ()).size == base
    for v in range(G.n):
        assert mvc_forced(G, {v}).size <= base + 1


def test_chordal_recognition_examples(C4, P4, K4):
    assert is_chordal(C4) is None
    assert is_chordal(P4) is not None
    assert is_chordal(K4) is not None


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_recognition_matches_networkx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    order = is_chordal(G)
    assert (order is not None) == nx.is_chordal(g)
    if order is not None:
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            later = [w for w in G.adj[v] if pos[w] > pos[v]]
            assert all(G.has_edge(a, b) for i, a in enumerate(later) for b in later[i + 1:])


def test_chordal_mvc_examples(P4, BOWTIE, K4):
    assert chordal_mvc(K4, is_chordal(K4)).size == 3
    assert chordal_mvc(P4, is_chordal(P4)).size == mvc_exact(P4).size == 2
    assert chordal_mvc(BOWTIE, is_chordal(BOWTIE)).size == mvc_exact(BOWTIE).size == 3


def test_chordal_mvc_rejects_bad_order(C4, P4):
    with pytest.raises(CoverError):
        chordal_mvc(C4, [0, 1, 2, 3])
    with pytest.raises(CoverError):
        chordal_mvc(P4, [1, 0, 2, 3])
    with pytest.raises(CoverError):
        chordal_mvc(P4, [0, 1, 2])


def test_chordal_forced_examples(P4, BOWTIE, K4):
    assert chordal_mvc_forced(P4, {1, 2}).size == mvc_forced(P4, {1, 2}).size == 2
    assert chordal_mvc_forced(BOWTIE, {0}).size == mvc_forced(BOWTIE, {0}).size == 3
    assert chordal_mvc_forced(K4, ()).size == 3


def test_chordal_forced_rejects_non_chordal(C4):
    with pytest.raises(CoverError, match="not chordal"):
        chordal_mvc_forced(C4, ())


def test_chordal_mvc_exhaustive_small():
    for G in atlas_chordal(7):
        res = chordal_mvc(G, is_chordal(G))
        _check(G, res)
        assert res.size == mvc_exact(G).size


@settings(max_examples=150)
@given(chordal_graphs(max_n=12), st.data())
def test_chordal_forced_matches_exact(G, data):
    X = data.draw(st.sets(st.integers(0, G.n - 1)))
    res = chordal_mvc_forced(G, X)
    _check(G, res, X)
    assert res.size == mvc_forced(G, X).size


def test_peo_rejects_non_permutation(P4):
    assert not is_perfect_elimination_order(P4, [0, 0, 1, 2])
    assert is_perfect_elimination_order(path_graph(1), [0])
    assert is_perfect_elimination_order(cycle_graph(3), [2, 0, 1])


def test_generated_chordal_is_chordal():
    for seed in range(20):
        assert is_chordal(random_chordal(60, seed, 0.6)) is not None
