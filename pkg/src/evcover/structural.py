"""Fast evc for locally-connected-block and chordal graphs, plus claim verifiers.

For a connected graph G with cut vertex set X whose minimum X-containing
covers are connected (guaranteed when every block is locally connected),
evc(G) is mvc_X(G) when every vertex lies in some minimum X-containing
cover, and mvc_X(G) + 1 otherwise.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .cover import CoverResult, chordal_mvc_forced, is_chordal, mvc_forced
from .decomposition import (
    b_components,
    block_cut_structure,
    blocks_locally_connected,
    is_x_extension,
    x_components,
)
from .game import ConfigClass, OccupancyModel, evc_class, evc_exact, evc_forced
from .graph import Graph, connected_components, induced_subgraph, is_connected


class StructuralError(ValueError):
    pass


@dataclass(frozen=True)
class EvcReport:
    lower_bound: int
    evc: int | None
    method: str
    plus_one_witness: int | None = None
    certificate: tuple[frozenset[int], ...] = ()


@dataclass
class VerificationReport:
    claim: str
    checked: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.checked += other.checked
        self.skipped += other.skipped
        self.failures.extend(other.failures)
        return self


def _require_connected(G: Graph, min_n: int = 0) -> None:
    if G.n < min_n:
        raise StructuralError(f"need at least {min_n} vertices, got {G.n}")
    if not is_connected(G):
        raise StructuralError("graph is not connected")


def _graph_dump(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


@functools.lru_cache(maxsize=4096)
def cached_evc(G: Graph, model: OccupancyModel = OccupancyModel.MULTI) -> tuple[int, ConfigClass]:
    return evc_exact(G, model)


def evc_lower_bound(G: Graph) -> int:
    """mvc_X(G) with X the cut vertices; never exceeds evc(G)."""
    _require_connected(G)
    return mvc_forced(G, block_cut_structure(G).cut_vertices).size


def _decide(
    G: Graph, X: frozenset[int], cover: Callable[[frozenset[int]], CoverResult], method: str
) -> EvcReport:
    base = cover(X)
    witness = None
    covers: dict[frozenset[int], None] = {base.witness: None}
    for v in range(G.n):
        if v in base.witness:
            continue
        res = cover(X | {v})
        covers.setdefault(res.witness, None)
        if res.size > base.size and witness is None:
            witness = v
    evc = base.size + (witness is not None)
    return EvcReport(base.size, evc, method, witness, tuple(covers))


def evc_locally_connected(G: Graph) -> EvcReport | None:
    """evc from constrained covers, or None if some block is not locally connected."""
    _require_connected(G, 2)
    structure = block_cut_structure(G)
    if not blocks_locally_connected(G, structure):
        return None
    return _decide(
        G,
        structure.cut_vertices,
        lambda S: mvc_forced(G, S),
        "locally-connected-blocks",
    )


def evc_chordal(G: Graph) -> EvcReport:
    """evc of a connected chordal graph in O(n (n + m)).

    One elimination order of G serves every forced cover. A vertex already
    in the greedy base cover needs no recomputation.
    """
    _require_connected(G, 2)
    order = is_chordal(G)
    if order is None:
        raise StructuralError("graph is not chordal")
    X = block_cut_structure(G).cut_vertices
    return _decide(
        G,
        X,
        lambda S: chordal_mvc_forced(G, S, order, check_order=False),
        "chordal",
    )


def evc_class_F_formula(G: Graph) -> int:
    """max over v of mvc_{X+v}(G); requires all blocks locally connected."""
    _require_connected(G, 2)
    structure = block_cut_structure(G)
    if not blocks_locally_connected(G, structure):
        raise StructuralError("some block is not locally connected")
    X = structure.cut_vertices
    return max(mvc_forced(G, X | {v}).size for v in range(G.n))


def in_class_F_bruteforce(G: Graph) -> bool:
    """Definitional membership test: every minimum X-containing cover is connected.

    Exponential; intended for n <= 12.
    """
    _require_connected(G)
    X = block_cut_structure(G).cut_vertices
    size = mvc_forced(G, X).size
    rest = [v for v in range(G.n) if v not in X]
    for extra in itertools.combinations(rest, size - len(X)):
        S = X | set(extra)
        if G.is_cover(S) and not is_connected(induced_subgraph(G, S)[0]):
            return False
    return True


def certificate_problem(G: Graph, k: int, covers: Sequence[Iterable[int]]) -> str | None:
    """Why ``covers`` fails to certify evc(G) <= k, or None if it certifies it."""
    X = block_cut_structure(G).cut_vertices
    sets = []
    for i, raw in enumerate(covers):
        try:
            S = frozenset(int(v) for v in raw)
        except (TypeError, ValueError):
            return f"cover {i} is not a set of vertex ids"
        if any(not 0 <= v < G.n for v in S):
            return f"cover {i} names a vertex outside 0..{G.n - 1}"
        if len(S) > k:
            return f"cover {i} has {len(S)} > {k} vertices"
        if not G.is_cover(S):
            return f"cover {i} is not a vertex cover"
        sets.append(S)
    for v in range(G.n):
        need = X | {v}
        if not any(need <= S for S in sets):
            return f"no cover contains the cut vertices together with vertex {v}"
    return None


def verify_certificate(G: Graph, k: int, covers: Sequence[Iterable[int]]) -> bool:
    return certificate_problem(G, k, covers) is None


def _forced_in_piece(piece, X: frozenset[int]) -> int:
    local = {piece.id_map[y] for y in X if y in piece.id_map}
    return mvc_forced(piece.subgraph, local).size


def verify_lemma1(G: Graph) -> VerificationReport:
    """mvc_X(G) = 1 + sum over x-components of (mvc_{X(Gi)}(Gi) - 1), per cut vertex x."""
    report = VerificationReport("lemma1")
    _require_connected(G)
    X = block_cut_structure(G).cut_vertices
    if not X:
        return report
    lhs = mvc_forced(G, X).size
    for x in sorted(X):
        pieces = x_components(G, x)
        terms = [_forced_in_piece(p, X) for p in pieces]
        rhs = 1 + sum(t - 1 for t in terms)
        with_x = mvc_forced(G, X | {x}).size
        report.checked += 1
        if lhs != rhs or with_x != lhs:
            report.failures.append(
                {"graph": _graph_dump(G), "x": x, "mvc_X": lhs, "mvc_X_x": with_x, "rhs": rhs, "terms": terms}
            )
    return report


def verify_lemma2(G: Graph) -> VerificationReport:
    """mvc_{X+v}(G) = mvc_{X(B)+v}(B) + sum over B-components of (mvc_{X(Gi)}(Gi) - 1)."""
    report = VerificationReport("lemma2")
    _require_connected(G)
    structure = block_cut_structure(G)
    X = structure.cut_vertices
    for block in structure.blocks:
        eligible = sorted(block - X)
        if not eligible:
            report.skipped += 1
            continue
        sub, mapping = induced_subgraph(G, block)
        pieces = b_components(G, block, structure)
        tail = sum(_forced_in_piece(p, X) - 1 for p in pieces)
        local_X = {mapping[y] for y in X & block}
        for v in eligible:
            lhs = mvc_forced(G, X | {v}).size
            head = mvc_forced(sub, local_X | {mapping[v]}).size
            report.checked += 1
            if lhs != head + tail:
                report.failures.append(
                    {"graph": _graph_dump(G), "block": sorted(block), "v": v, "lhs": lhs, "block_term": head, "tail": tail}
                )
    return report


def verify_evc_cut_property(
    G_prime: Graph,
    x: int,
    extension: Graph,
    delta: int = 1,
    model: OccupancyModel = OccupancyModel.MULTI,
) -> VerificationReport:
    """Guard counts on G' in every evc-class configuration of an x-extension.

    G' must occupy ids 0..n'-1 of ``extension`` (as built by
    ``attach_extension``). Checks k = evc .. evc + delta.
    """
    if not is_x_extension(extension, G_prime, x):
        raise StructuralError(f"graph is not an x-extension of G' at x={x}")
    _require_connected(G_prime)
    report = VerificationReport("cutprop")
    Xp = block_cut_structure(G_prime).cut_vertices
    need = mvc_forced(G_prime, Xp | {x}).size
    inside = range(G_prime.n)
    off_x = [v for v in inside if v != x]
    evc, first = cached_evc(extension, OccupancyModel(model))
    for k in range(evc, evc + delta + 1):
        if OccupancyModel(model) == OccupancyModel.SINGLE and k > extension.n:
            break
        cls = first if k == evc else evc_class(extension, k, model)
        for c in cls:
            on_g, off = c.guards_on(inside), c.guards_on(off_x)
            report.checked += 1
            if on_g < need or off < need - 1:
                report.failures.append(
                    {
                        "graph": _graph_dump(extension),
                        "g_prime_n": G_prime.n,
                        "x": x,
                        "k": k,
                        "l": need,
                        "config": list(c.counts),
                        "guards_on_g_prime": on_g,
                        "guards_off_x": off,
                    }
                )
    return report


def verify_observation1(G: Graph, model: OccupancyModel = OccupancyModel.MULTI) -> VerificationReport:
    """When evc = mvc_X, every configuration of the maximal class occupies X."""
    report = VerificationReport("obs1")
    _require_connected(G)
    X = block_cut_structure(G).cut_vertices
    evc, cls = cached_evc(G, OccupancyModel(model))
    if not X or evc != mvc_forced(G, X).size:
        report.skipped += 1
        return report
    for c in cls:
        report.checked += 1
        if not X <= c.occupied():
            report.failures.append({"graph": _graph_dump(G), "config": list(c.counts), "cut_vertices": sorted(X)})
    return report


def verify_theorem1(G: Graph, model: OccupancyModel = OccupancyModel.MULTI) -> VerificationReport:
    report = VerificationReport("theorem1")
    _require_connected(G)
    evc, _ = cached_evc(G, OccupancyModel(model))
    bound = evc_lower_bound(G)
    report.checked += 1
    if evc < bound:
        report.failures.append({"graph": _graph_dump(G), "evc": evc, "mvc_X": bound})
    return report


def verify_sandwich(G: Graph) -> VerificationReport:
    """mvc_X <= evc <= mvc_X + 1 with the endpoint predicted by the per-vertex rule."""
    report = VerificationReport("corollary2")
    if G.n < 2:
        report.skipped += 1
        return report
    fast = evc_locally_connected(G)
    if fast is None:
        report.skipped += 1
        return report
    evc, _ = cached_evc(G)
    report.checked += 1
    if not fast.lower_bound <= evc <= fast.lower_bound + 1 or evc != fast.evc:
        report.failures.append(
            {"graph": _graph_dump(G), "evc": evc, "mvc_X": fast.lower_bound, "predicted": fast.evc}
        )
    return report


def verify_chordal(G: Graph) -> VerificationReport:
    """evc_chordal agrees with the game solver, and its certificate is tight."""
    report = VerificationReport("chordal")
    if G.n < 2 or is_chordal(G) is None:
        report.skipped += 1
        return report
    fast = evc_chordal(G)
    evc, _ = cached_evc(G)
    report.checked += 1
    problems = []
    if fast.evc != evc:
        problems.append("value")
    if not verify_certificate(G, fast.evc, fast.certificate):
        problems.append("certificate")
    if fast.plus_one_witness is not None and verify_certificate(G, fast.evc - 1, fast.certificate):
        problems.append("certificate-not-tight")
    if problems:
        report.failures.append(
            {"graph": _graph_dump(G), "evc": evc, "fast": fast.evc, "problems": problems}
        )
    return report


def verify_forced_equals_evc(G: Graph) -> VerificationReport:
    """For graphs with locally connected blocks, evc = evc_X."""
    report = VerificationReport("theorem2-forced")
    if G.n < 2 or evc_locally_connected(G) is None:
        report.skipped += 1
        return report
    X = block_cut_structure(G).cut_vertices
    evc, _ = cached_evc(G)
    forced = evc_forced(G, X)
    report.checked += 1
    if forced != evc:
        report.failures.append({"graph": _graph_dump(G), "evc": evc, "evc_X": forced})
    return report


VERIFIERS: dict[str, Callable[[Graph], VerificationReport]] = {
    "lemma1": verify_lemma1,
    "lemma2": verify_lemma2,
    "obs1": verify_observation1,
    "theorem1": verify_theorem1,
    "corollary2": verify_sandwich,
    "chordal": verify_chordal,
}


def per_component(G: Graph) -> list[tuple[Graph, dict[int, int]]]:
    return [induced_subgraph(G, part) for part in connected_components(G)]
