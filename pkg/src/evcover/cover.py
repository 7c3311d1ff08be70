"""Minimum vertex covers: exact, forced-set, and linear-time chordal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, remove_vertices


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class CoverResult:
    size: int
    witness: frozenset[int]


# ---------------------------------------------------------------------------
# exact solver on bitmask adjacency


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _greedy_matching(adjm: Sequence[int], R: int) -> int:
    size = 0
    free = R
    for v in _bits(R):
        if not free >> v & 1:
            continue
        cand = adjm[v] & free
        if cand:
            u = (cand & -cand).bit_length() - 1
            free &= ~((1 << v) | (1 << u))
            size += 1
    return size


def _min_cover_size(adjm: Sequence[int], R: int, budget: int) -> int:
    """Minimum cover size of G[R], or some value > budget if it exceeds budget."""
    taken = 0
    changed = True
    while changed:
        changed = False
        for v in _bits(R):
            if not R >> v & 1:
                continue
            nb = adjm[v] & R
            if not nb:
                R &= ~(1 << v)
                changed = True
            elif nb & (nb - 1) == 0:
                # degree one: some minimum cover takes the neighbor
                R &= ~(nb | (1 << v))
                taken += 1
                changed = True
    if not R:
        return taken
    if taken > budget:
        return budget + 1
    best_v, best_deg = -1, -1
    for v in _bits(R):
        d = (adjm[v] & R).bit_count()
        if d > best_deg:
            best_v, best_deg = v, d
    if best_deg <= 2:
        # only disjoint cycles remain after the reductions
        total = 0
        left = R
        while left:
            s = (left & -left).bit_length() - 1
            comp, frontier = 1 << s, 1 << s
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= adjm[u] & R
                frontier = nxt & ~comp
                comp |= nxt
            left &= ~comp
            total += (comp.bit_count() + 1) // 2
        return taken + total
    rest = budget - taken
    if _greedy_matching(adjm, R) > rest:
        return budget + 1
    v = best_v
    with_v = 1 + _min_cover_size(adjm, R & ~(1 << v), rest - 1)
    best = min(with_v, rest + 1)
    nb = adjm[v] & R
    if best_deg < best:
        without_v = best_deg + _min_cover_size(adjm, R & ~(nb | (1 << v)), best - 1 - best_deg)
        best = min(best, without_v)
    return taken + best


def _lex_first_cover(adjm: Sequence[int], n: int, target: int) -> int | None:
    """Lexicographically smallest cover of exactly ``target`` vertices, as a mask.

    Decides vertices in index order, trying inclusion first; the first leaf
    reached is the lexicographic minimum among covers of that size.
    """
    full = (1 << n) - 1

    def lower_bound(i: int, exc: int) -> int:
        undecided = full & ~((1 << i) - 1)
        forced = 0
        for j in _bits(undecided):
            if adjm[j] & exc:
                forced |= 1 << j
        return forced.bit_count() + _greedy_matching(adjm, undecided & ~forced)

    def dfs(i: int, inc: int, exc: int, count: int) -> int | None:
        if count + lower_bound(i, exc) > target:
            return None
        if i == n:
            return inc
        bit = 1 << i
        forced = adjm[i] & exc
        if adjm[i] & ~inc:
            found = dfs(i + 1, inc | bit, exc, count + 1)
            if found is not None:
                return found
        if not forced:
            return dfs(i + 1, inc, exc | bit, count)
        return None

    return dfs(0, 0, 0, 0)


def _adj_masks(G: Graph) -> list[int]:
    masks = [0] * G.n
    for u, v in G.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def mvc_exact(G: Graph) -> CoverResult:
    """Exact minimum vertex cover for small graphs (n up to about 40).

    Among minimum covers the witness is the lexicographically smallest
    sorted vertex tuple.
    """
    if not G.edges:
        return CoverResult(0, frozenset())
    adjm = _adj_masks(G)
    size = _min_cover_size(adjm, (1 << G.n) - 1, G.n)
    mask = _lex_first_cover(adjm, G.n, size)
    assert mask is not None
    return CoverResult(size, frozenset(_bits(mask)))


def mvc_forced(G: Graph, X: Iterable[int]) -> CoverResult:
    """Smallest cover containing X, via |X| + mvc(G - X)."""
    forced = frozenset(X)
    for v in forced:
        if not 0 <= v < G.n:
            raise CoverError(f"vertex {v} is outside 0..{G.n - 1}")
    rest, mapping = remove_vertices(G, forced)
    inner = mvc_exact(rest)
    inv = {new: old for old, new in mapping.items()}
    return CoverResult(len(forced) + inner.size, forced | {inv[v] for v in inner.witness})


# ---------------------------------------------------------------------------
# chordal graphs


class _Cell:
    __slots__ = ("verts", "prev", "next", "split")

    def __init__(self) -> None:
        self.verts: dict[int, None] = {}
        self.prev: _Cell | None = None
        self.next: _Cell | None = None
        self.split: _Cell | None = None


def lex_bfs(G: Graph) -> list[int]:
    """Lexicographic BFS by partition refinement, O(n + m)."""
    if G.n == 0:
        return []
    head = _Cell()
    head.verts = dict.fromkeys(range(G.n))
    cell_of = [head] * G.n
    visited = [False] * G.n
    order = []

    def unlink(c: _Cell) -> None:
        nonlocal head
        if c.prev is not None:
            c.prev.next = c.next
        else:
            head = c.next
        if c.next is not None:
            c.next.prev = c.prev

    for _ in range(G.n):
        cell = head
        v = next(iter(cell.verts))
        del cell.verts[v]
        if not cell.verts:
            unlink(cell)
        visited[v] = True
        order.append(v)
        touched = []
        for w in G.adj[v]:
            if visited[w]:
                continue
            c = cell_of[w]
            if c.split is None:
                new = _Cell()
                new.prev, new.next = c.prev, c
                if c.prev is not None:
                    c.prev.next = new
                else:
                    head = new
                c.prev = new
                c.split = new
                touched.append(c)
            del c.verts[w]
            c.split.verts[w] = None
            cell_of[w] = c.split
        for c in touched:
            c.split = None
            if not c.verts:
                unlink(c)
    return order


def is_perfect_elimination_order(G: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(G.n)):
        return False
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    adj_sets = [set(a) for a in G.adj]
    for v in order:
        later = [w for w in G.adj[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        p = min(later, key=pos.__getitem__)
        ps = adj_sets[p]
        for w in later:
            if w != p and w not in ps:
                return False
    return True


def is_chordal(G: Graph) -> list[int] | None:
    """A perfect elimination order if G is chordal, else None."""
    order = lex_bfs(G)[::-1]
    return order if is_perfect_elimination_order(G, order) else None


def _greedy_independent(G: Graph, order: Sequence[int], skip: Iterable[int] = ()) -> list[int]:
    # first vertex of a PEO is simplicial, so greedy along the order is maximum
    blocked = bytearray(G.n)
    for v in skip:
        blocked[v] = 1
    chosen = []
    adj = G.adj
    for v in order:
        if not blocked[v]:
            chosen.append(v)
            for w in adj[v]:
                blocked[w] = 1
    return chosen


def chordal_mvc(G: Graph, order: Sequence[int]) -> CoverResult:
    """Minimum cover of a chordal graph as the complement of a greedy MIS."""
    if not is_perfect_elimination_order(G, order):
        raise CoverError("order is not a perfect elimination order")
    mis = set(_greedy_independent(G, order))
    return CoverResult(G.n - len(mis), frozenset(v for v in range(G.n) if v not in mis))


def chordal_mvc_forced(
    G: Graph,
    X: Iterable[int],
    order: Sequence[int] | None = None,
    check_order: bool = True,
) -> CoverResult:
    """|X| + mvc(G - X) for chordal G.

    The elimination order of G, restricted to G - X, is again a perfect
    elimination order, so one order serves every forced set.
    """
    forced = frozenset(X)
    if order is None:
        order = is_chordal(G)
        if order is None:
            raise CoverError("graph is not chordal")
    elif check_order and not is_perfect_elimination_order(G, order):
        raise CoverError("order is not a perfect elimination order")
    mis = set(_greedy_independent(G, order, forced))
    return CoverResult(G.n - len(mis), frozenset(v for v in range(G.n) if v not in mis))
