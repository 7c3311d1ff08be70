"""Edge-list and DIMACS readers/writers with external label maps.

Edge list grammar
-----------------
``#`` starts a comment; blank lines are ignored; every data line holds two
whitespace-separated tokens. The first data line is a header ``n m`` when
both tokens are non-negative integers, exactly ``m`` data lines follow, and
every following token is an integer in ``0..n-1``; vertices are then
``0..n-1`` (isolated ones included). Otherwise every line is an edge and
the labels are its tokens: numerically sorted when all are integers, else
in order of first appearance.

DIMACS grammar
--------------
``c`` lines are comments, one ``p edge n m`` line (``p col`` is accepted),
then ``e u v`` lines with 1-based ids. Labels are the 1-based ids.
"""

from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Hashable, Sequence

from .graph import Graph, GraphError, build_graph

FORMATS = ("edgelist", "dimacs")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _as_int(tok: str) -> int | None:
    try:
        return int(tok)
    except ValueError:
        return None


def _build(n: int, pairs: list[tuple[int, int, int]]) -> Graph:
    seen = set()
    for u, v, line in pairs:
        if u == v:
            raise ParseError(f"self-loop on {u}", line)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", line)
        seen.add(key)
    try:
        return build_graph(n, [(u, v) for u, v, _ in pairs])
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def parse_edgelist(text: str) -> tuple[Graph, list[Hashable]]:
    rows: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected two tokens, got {len(toks)}", lineno)
        rows.append((lineno, toks[0], toks[1]))
    if rows:
        n, m = _as_int(rows[0][1]), _as_int(rows[0][2])
        rest = rows[1:]
        if n is not None and m is not None and n >= 0 and m == len(rest):
            ints = [(_as_int(a), _as_int(b), ln) for ln, a, b in rest]
            if all(a is not None and b is not None and 0 <= a < n and 0 <= b < n for a, b, _ in ints):
                return _build(n, ints), list(range(n))
    tokens = [t for _, a, b in rows for t in (a, b)]
    key = str
    if all(_as_int(t) is not None for t in tokens):
        key = int
        labels: list[Hashable] = sorted({int(t) for t in tokens})
    else:
        labels = list(dict.fromkeys(tokens))
    ids = {lab: i for i, lab in enumerate(labels)}
    pairs = [(ids[key(a)], ids[key(b)], ln) for ln, a, b in rows]
    for u, v, ln in pairs:
        if u == v:
            raise ParseError(f"self-loop on {labels[u]}", ln)
    return _build(len(labels), pairs), labels


def parse_dimacs(text: str) -> tuple[Graph, list[Hashable]]:
    n = declared = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge n m'", lineno)
            n, declared = _as_int(toks[2]), _as_int(toks[3])
            if n is None or declared is None or n < 0 or declared < 0:
                raise ParseError("bad counts on problem line", lineno)
        elif toks[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(toks) != 3:
                raise ParseError("expected 'e u v'", lineno)
            u, v = _as_int(toks[1]), _as_int(toks[2])
            if u is None or v is None or not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"endpoint outside 1..{n}", lineno)
            pairs.append((u - 1, v - 1, lineno))
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if declared != len(pairs):
        raise ParseError(f"problem line declares {declared} edges, found {len(pairs)}")
    return _build(n, pairs), list(range(1, n + 1))


def detect_format(path: str | Path) -> str:
    return "dimacs" if Path(path).suffix.lower() in (".dimacs", ".col", ".clq") else "edgelist"


def parse_graph(path: str | Path, fmt: str | None = None) -> tuple[Graph, list[Hashable]]:
    fmt = fmt or detect_format(path)
    text = Path(path).read_text()
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}")


def file_digest(path: str | Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def serialize(G: Graph, labels: Sequence[Hashable] | None = None, fmt: str = "edgelist") -> str:
    labels = list(range(G.n)) if labels is None else list(labels)
    edges = G.sorted_edges()
    if fmt == "dimacs":
        lines = [f"p edge {G.n} {G.m}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    elif fmt == "edgelist":
        lines = [f"{G.n} {G.m}"] if labels == list(range(G.n)) else []
        lines += [f"{labels[u]} {labels[v]}" for u, v in edges]
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(lines) + "\n"
