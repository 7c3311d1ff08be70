import pytest
from hypothesis import given, settings

from evcover.corpus import atlas_connected
from evcover.cover import mvc_forced
from evcover.decomposition import attach_extension, block_cut_structure, blocks_locally_connected
from evcover.game import evc_exact, evc_forced
from evcover.generators import random_chordal
from evcover.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    is_connected,
    path_graph,
    star_graph,
)
from evcover.structural import (
    StructuralError,
    VerificationReport,
    evc_chordal,
    evc_class_F_formula,
    evc_locally_connected,
    evc_lower_bound,
    in_class_F_bruteforce,
    verify_certificate,
    verify_chordal,
    verify_evc_cut_property,
    verify_forced_equals_evc,
    verify_lemma1,
    verify_lemma2,
    verify_observation1,
    verify_sandwich,
    verify_theorem1,
)

from strategies import chordal_graphs, connected_graphs

K13 = star_graph(3)


def test_lower_bound_examples(P4, BOWTIE, C4):
    assert evc_lower_bound(P4) == 2
    assert evc_lower_bound(BOWTIE) == 3
    assert evc_lower_bound(C4) == 2


def test_lower_bound_rejects_disconnected():
    with pytest.raises(StructuralError, match="not connected"):
        evc_lower_bound(build_graph(4, [(0, 1), (2, 3)]))


def test_locally_connected_examples(P4, BOWTIE, C4):
    rep = evc_locally_connected(P4)
    assert (rep.lower_bound, rep.evc, rep.plus_one_witness) == (2, 3, 0)
    rep = evc_locally_connected(BOWTIE)
    assert (rep.lower_bound, rep.evc, rep.plus_one_witness) == (3, 3, None)
    rep = evc_locally_connected(K13)
    assert (rep.lower_bound, rep.evc) == (1, 2)
    assert evc_locally_connected(C4) is None


def test_locally_connected_preconditions():
    with pytest.raises(StructuralError):
        evc_locally_connected(build_graph(1, []))
    with pytest.raises(StructuralError):
        evc_locally_connected(build_graph(3, [(0, 1)]))


def test_chordal_examples(P4, BOWTIE, K4, C4):
    for G in (P4, BOWTIE, K4):
        rep = evc_chordal(G)
        assert rep.evc == 3 == evc_exact(G)[0]
        assert rep.method == "chordal"
    with pytest.raises(StructuralError, match="not chordal"):
        evc_chordal(C4)


def test_class_F_formula_examples(P4, BOWTIE, C4):
    assert evc_class_F_formula(P4) == 3
    assert evc_class_F_formula(K13) == 2
    assert evc_class_F_formula(BOWTIE) == 3
    with pytest.raises(StructuralError):
        evc_class_F_formula(C4)


def test_certificate_examples(P4, BOWTIE):
    assert verify_certificate(P4, 3, [{0, 1, 2}, {1, 2, 3}])
    assert not verify_certificate(P4, 2, [{1, 2}])
    assert verify_certificate(BOWTIE, 3, [{0, 1, 3}, {0, 2, 4}])


def test_certificate_rejects_malformed(P4):
    assert not verify_certificate(P4, 3, [{0, 1, 9}])
    assert not verify_certificate(P4, 3, [["a"]])
    assert not verify_certificate(P4, 3, [{0, 3}])
    assert not verify_certificate(P4, 2, [{0, 1, 2}, {1, 2, 3}])


def test_lemma1_examples(P3, P4, BOWTIE, C4):
    for G in (P3, P4, BOWTIE):
        rep = verify_lemma1(G)
        assert rep.ok and rep.checked == len(block_cut_structure(G).cut_vertices)
    assert verify_lemma1(C4).checked == 0


def test_lemma2_examples(P4, BOWTIE):
    rep = verify_lemma2(P4)
    assert rep.ok and rep.skipped == 1 and rep.checked == 2
    rep = verify_lemma2(BOWTIE)
    assert rep.ok and rep.checked == 4
    assert verify_lemma2(K13).ok


def test_cutprop_examples(P3):
    G = attach_extension(P3, 2, complete_graph(2), 0)
    assert G == path_graph(4)
    rep = verify_evc_cut_property(P3, 2, G)
    assert rep.ok and rep.checked > 0
    K3 = complete_graph(3)
    rep = verify_evc_cut_property(K3, 0, attach_extension(K3, 0, K3, 0))
    assert rep.ok and rep.checked > 0


def test_cutprop_rejects_non_extension(P3, P4):
    with pytest.raises(StructuralError):
        verify_evc_cut_property(P3, 0, P4)


def test_cutprop_delta_zero_checks_each_config_once():
    rep = verify_evc_cut_property(path_graph(3), 2, path_graph(4), delta=0)
    assert rep.ok and rep.checked == len(evc_exact(path_graph(4))[1])


def test_observation1_examples(P3, BOWTIE):
    rep = verify_observation1(BOWTIE)
    assert rep.ok and rep.checked == len(evc_exact(BOWTIE)[1])
    assert verify_observation1(K13).skipped == 1
    assert verify_observation1(P3).skipped == 1


def test_theorem1_examples(P4, C4):
    assert verify_theorem1(P4).ok
    assert verify_theorem1(C4).ok


def test_forced_equals_evc_examples(P4, BOWTIE, C4):
    assert verify_forced_equals_evc(P4).checked == 1
    assert verify_forced_equals_evc(BOWTIE).ok
    assert verify_forced_equals_evc(C4).skipped == 1
    assert evc_forced(P4, {1, 2}) == 3


def test_report_merge():
    a = VerificationReport("x", 2, 1, [{"a": 1}])
    b = VerificationReport("x", 3, 0, [])
    a.merge(b)
    assert (a.checked, a.skipped, a.ok) == (5, 1, False)


def test_sandwich_and_forced_on_small_atlas():
    for G in atlas_connected(6):
        if G.n < 2:
            continue
        assert verify_sandwich(G).ok
        assert verify_forced_equals_evc(G).ok


def test_locally_connected_blocks_are_in_class_F():
    for G in atlas_connected(6):
        if G.n >= 2 and blocks_locally_connected(G):
            assert in_class_F_bruteforce(G)


def test_class_F_bruteforce_negative():
    # C4's minimum covers {0,2} and {1,3} are independent sets
    assert not in_class_F_bruteforce(cycle_graph(4))


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=11, min_n=3))
def test_lemma_identities_hold(G):
    assert verify_lemma1(G).ok
    assert verify_lemma2(G).ok


@settings(max_examples=40, deadline=None)
@given(chordal_graphs(max_n=7))
def test_chordal_agrees_with_game(G):
    if G.n >= 2 and is_connected(G):
        assert verify_chordal(G).ok


@settings(max_examples=60, deadline=None)
@given(chordal_graphs(max_n=14))
def test_structural_routes_agree(G):
    if G.n < 2 or not is_connected(G):
        return
    fast = evc_chordal(G)
    lc = evc_locally_connected(G)
    assert lc is not None
    assert fast.evc == lc.evc == evc_class_F_formula(G)
    assert fast.lower_bound <= fast.evc <= fast.lower_bound + 1
    assert verify_certificate(G, fast.evc, fast.certificate)
    if fast.plus_one_witness is not None:
        assert not verify_certificate(G, fast.evc - 1, fast.certificate)
        v = fast.plus_one_witness
        X = block_cut_structure(G).cut_vertices
        assert mvc_forced(G, X | {v}).size == fast.evc


def test_chordal_fast_on_larger_graph():
    G = random_chordal(200, 4, 0.5)
    rep = evc_chordal(G)
    assert rep.lower_bound <= rep.evc <= rep.lower_bound + 1
    assert verify_certificate(G, rep.evc, rep.certificate)
