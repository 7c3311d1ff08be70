"""Command-line entry point: ``evcover <command> ...``.

Every command prints one JSON document on stdout. Exit status is 0 on
success, 1 when a verified claim (or a checked certificate) fails, and 2
for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Hashable, Sequence

from . import __version__
from .corpus import DEFAULT_CORPUS, CorpusError, Triple, parse_corpus
from .cover import CoverError, chordal_mvc_forced, is_chordal, mvc_exact, mvc_forced
from .decomposition import block_cut_structure, is_locally_connected
from .game import OccupancyModel, evc_class, evc_exact, evc_forced
from .generators import KINDS, generate, random_interval
from .graph import Graph, GraphError, induced_subgraph, is_connected
from .io import FORMATS, ParseError, file_digest, parse_graph, serialize
from .structural import (
    VERIFIERS,
    StructuralError,
    VerificationReport,
    evc_chordal,
    evc_locally_connected,
    evc_lower_bound,
    certificate_problem,
    per_component,
    verify_evc_cut_property,
)

SCHEMA_VERSION = 1
JOBS_ENV = "EVCOVER_JOBS"
EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2
CLAIMS = ("lemma1", "lemma2", "cutprop", "obs1", "theorem1", "corollary2", "chordal")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _load(args) -> tuple[Graph, list[Hashable]]:
    path = Path(args.file)
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    return parse_graph(path, args.format)


def _label_ids(labels: Sequence[Hashable], raw: str | None) -> frozenset[int]:
    if not raw:
        return frozenset()
    lookup = {str(lab): i for i, lab in enumerate(labels)}
    out = set()
    for tok in raw.split(","):
        tok = tok.strip()
        if tok not in lookup:
            raise UsageError(f"unknown vertex label {tok!r}")
        out.add(lookup[tok])
    return frozenset(out)


def _components(G: Graph, labels: Sequence[Hashable]):
    for sub, mapping in per_component(G):
        sub_labels = [None] * sub.n
        for old, new in mapping.items():
            sub_labels[new] = labels[old]
        yield sub, mapping, sub_labels


def _labelled(ids, labels: Sequence[Hashable]) -> list:
    return [labels[v] for v in sorted(ids)]


def _jobs(args) -> int:
    if getattr(args, "jobs", None):
        return max(1, args.jobs)
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        raise UsageError(f"{JOBS_ENV} must be an integer")


def _report(command: str, args, parameters: dict, results: Any, digest: str | None = None) -> dict:
    out = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": command,
        "parameters": parameters,
        "results": results,
    }
    if digest is not None:
        out["input_digest"] = digest
    return out


def _emit(report: dict, args, started: float) -> None:
    if getattr(args, "timing", False):
        report["wall_time_s"] = round(time.perf_counter() - started, 6)
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    if getattr(args, "verbose", False):
        results = report["results"]
        rows = results.items() if isinstance(results, dict) else enumerate(results)
        for key, value in rows:
            if not isinstance(value, (list, dict)):
                print(f"{key:>20}  {value}", file=sys.stderr)


# ---------------------------------------------------------------------------
# commands


def cmd_evc_exact(args) -> int:
    G, labels = _load(args)
    model = OccupancyModel(args.model)
    forced = _label_ids(labels, args.forced)
    comps = []
    total = 0
    for sub, mapping, sub_labels in _components(G, labels):
        local = frozenset(mapping[v] for v in forced if v in mapping)
        if local:
            k = evc_forced(sub, local, model)
            cls = evc_class(sub, k, model, local) if args.show_class else None
        else:
            k, cls = evc_exact(sub, model)
        total += k
        entry = {"vertices": sub_labels, "k": k, "mvc": mvc_exact(sub).size}
        if args.compare_models:
            other = OccupancyModel.SINGLE if model is OccupancyModel.MULTI else OccupancyModel.MULTI
            entry[f"k_{other.value}"] = evc_forced(sub, local, other) if local else evc_exact(sub, other)[0]
        if cls is not None:
            entry["class_size"] = len(cls)
            if args.show_class:
                entry["configs"] = [
                    {str(sub_labels[v]): c for v, c in cfg.as_dict().items()} for cfg in cls
                ]
        comps.append(entry)
    results = {
        "k": total,
        "model": model.value,
        "forced": _labelled(forced, labels),
        "components": comps,
    }
    if args.compare_models:
        key = "k_single" if model is OccupancyModel.MULTI else "k_multi"
        results[key] = sum(c[key] for c in comps)
        results["models_diverge"] = results[key] != total
    params = {
        "model": model.value,
        "forced": args.forced or "",
        "show_class": args.show_class,
        "compare_models": args.compare_models,
    }
    _emit(_report("evc exact", args, params, results, file_digest(args.file)), args, args._started)
    return EXIT_OK


def _fast_component(sub: Graph, allow_exact: bool):
    if sub.n < 2:
        # no edges, no attacks
        return {"lower_bound": 0, "evc": 0, "method": "chordal"}, None
    try:
        rep = evc_chordal(sub)
    except StructuralError:
        rep = evc_locally_connected(sub)
    if rep is not None:
        return {"lower_bound": rep.lower_bound, "evc": rep.evc, "method": rep.method}, rep
    bound = evc_lower_bound(sub)
    if allow_exact:
        return {"lower_bound": bound, "evc": evc_exact(sub)[0], "method": "exact-game"}, None
    return {"lower_bound": bound, "evc": None, "method": "bound-only"}, None


def cmd_evc_fast(args) -> int:
    G, labels = _load(args)
    comps = []
    for sub, _, sub_labels in _components(G, labels):
        entry, rep = _fast_component(sub, args.allow_exact_fallback)
        entry["vertices"] = sub_labels
        if rep is not None:
            entry["plus_one_witness"] = None if rep.plus_one_witness is None else sub_labels[rep.plus_one_witness]
            if args.certificate:
                entry["certificate"] = [_labelled(S, sub_labels) for S in rep.certificate]
        comps.append(entry)
    methods = sorted({c["method"] for c in comps})
    evcs = [c["evc"] for c in comps]
    results = {
        "lower_bound": sum(c["lower_bound"] for c in comps),
        "evc": None if any(e is None for e in evcs) else sum(evcs),
        "method": methods[0] if len(methods) == 1 else "mixed",
        "components": comps,
    }
    params = {"allow_exact_fallback": args.allow_exact_fallback, "certificate": args.certificate}
    _emit(_report("evc fast", args, params, results, file_digest(args.file)), args, args._started)
    return EXIT_OK


def cmd_mvc(args) -> int:
    G, labels = _load(args)
    forced = _label_ids(labels, args.forced)
    comps = []
    for sub, mapping, sub_labels in _components(G, labels):
        local = frozenset(mapping[v] for v in forced if v in mapping)
        order = is_chordal(sub)
        if order is not None and sub.n > 40:
            res, method = chordal_mvc_forced(sub, local, order, check_order=False), "chordal"
        else:
            res, method = mvc_forced(sub, local), "exact"
        comps.append({"vertices": sub_labels, "size": res.size, "witness": _labelled(res.witness, sub_labels), "method": method})
    results = {
        "size": sum(c["size"] for c in comps),
        "witness": [lab for c in comps for lab in c["witness"]],
        "forced": _labelled(forced, labels),
        "components": comps,
    }
    _emit(_report("mvc", args, {"forced": args.forced or ""}, results, file_digest(args.file)), args, args._started)
    return EXIT_OK


def cmd_decompose(args) -> int:
    G, labels = _load(args)
    structure = block_cut_structure(G)
    blocks = sorted((sorted(b) for b in structure.blocks), key=lambda b: (b[0], len(b), b))
    results = {
        "n": G.n,
        "m": G.m,
        "connected": is_connected(G),
        "components": len(per_component(G)),
        "chordal": is_chordal(G) is not None,
        "cut_vertices": _labelled(structure.cut_vertices, labels),
        "blocks": [
            {
                "vertices": [labels[v] for v in b],
                "locally_connected": is_locally_connected(induced_subgraph(G, b)[0]),
            }
            for b in blocks
        ],
    }
    _emit(_report("decompose", args, {}, results, file_digest(args.file)), args, args._started)
    return EXIT_OK


def _verify_one(task) -> VerificationReport:
    claim, instance, delta, model = task
    if claim == "cutprop":
        return verify_evc_cut_property(instance.g_prime, instance.x, instance.extension, delta, model)
    fn = VERIFIERS[claim]
    if claim in ("obs1", "theorem1"):
        return fn(instance, model)
    return fn(instance)


def cmd_verify(args) -> int:
    spec = args.corpus or DEFAULT_CORPUS[args.claim]
    instances = parse_corpus(spec)
    if args.claim == "cutprop" and not all(isinstance(i, Triple) for i in instances):
        raise UsageError("cutprop needs a triples-... corpus")
    if args.claim != "cutprop" and any(isinstance(i, Triple) for i in instances):
        raise UsageError(f"{args.claim} needs a graph corpus")
    model = OccupancyModel(args.model)
    tasks = [(args.claim, inst, args.delta, model) for inst in instances]
    jobs = _jobs(args)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_one, tasks, chunksize=8))
    else:
        reports = [_verify_one(t) for t in tasks]
    total = VerificationReport(args.claim)
    for i, rep in enumerate(reports):
        for failure in rep.failures:
            failure["instance"] = i
        total.merge(rep)
    results = {
        "claim": args.claim,
        "corpus": spec,
        "instances": len(instances),
        "checked": total.checked,
        "skipped": total.skipped,
        "failure_count": len(total.failures),
        "failures": total.failures,
    }
    params = {"corpus": spec, "delta": args.delta, "model": model.value}
    _emit(_report(f"verify {args.claim}", args, params, results), args, args._started)
    return EXIT_OK if total.ok else EXIT_FALSIFIED


def cmd_certificate_check(args) -> int:
    G, labels = _load(args)
    cpath = Path(args.covers)
    if not cpath.is_file():
        raise UsageError(f"no such file: {cpath}")
    try:
        data = json.loads(cpath.read_text())
    except json.JSONDecodeError as exc:
        raise UsageError(f"{cpath}: invalid JSON ({exc})")
    if isinstance(data, dict):
        data = data.get("covers")
    lookup = {str(lab): i for i, lab in enumerate(labels)}
    reason = None
    covers = []
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        reason = "covers must be a JSON list of label lists"
    else:
        for i, cover in enumerate(data):
            missing = [lab for lab in cover if str(lab) not in lookup]
            if missing:
                reason = f"cover {i} names unknown labels {missing}"
                break
            covers.append([lookup[str(lab)] for lab in cover])
    if reason is None:
        reason = certificate_problem(G, args.k, covers)
    results = {"k": args.k, "covers": len(covers), "valid": reason is None, "reason": reason}
    digest = file_digest(args.file)
    _emit(_report("certificate check", args, {"k": args.k}, results, digest), args, args._started)
    return EXIT_OK if reason is None else EXIT_FALSIFIED


def cmd_generate(args) -> int:
    if args.n < 1:
        raise UsageError("n must be at least 1")
    try:
        G = generate(args.kind, args.n, args.seed, args.density)
    except ValueError as exc:
        raise UsageError(str(exc))
    text = serialize(G, fmt=args.format or "edgelist")
    if args.output:
        Path(args.output).write_text(text)
        results = {"kind": args.kind, "n": G.n, "m": G.m, "chordal": is_chordal(G) is not None, "path": args.output}
        params = {"kind": args.kind, "n": args.n, "seed": args.seed, "density": args.density}
        _emit(_report("generate", args, params, results), args, args._started)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_scaling(args) -> int:
    from .plots import plot_scaling

    sizes = [int(s) for s in args.sizes.split(",")]
    rows = []
    for n in sizes:
        G = random_interval(n, args.seed, args.avg_degree)
        t0 = time.perf_counter()
        rep = evc_chordal(G)
        rows.append({"n": n, "m": G.m, "seconds": round(time.perf_counter() - t0, 6), "lower_bound": rep.lower_bound, "evc": rep.evc})
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "scaling.csv", "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    figure = plot_scaling([r["n"] for r in rows], [r["seconds"] for r in rows], out / "scaling.png")
    ratios = [rows[i + 1]["seconds"] / rows[i]["seconds"] for i in range(len(rows) - 1) if rows[i]["seconds"] > 0]
    results = {"rows": rows, "ratios": [round(r, 3) for r in ratios], "csv": str(out / "scaling.csv"), "figure": str(figure)}
    params = {"sizes": sizes, "seed": args.seed, "avg_degree": args.avg_degree}
    _emit(_report("scaling", args, params, results), args, args._started)
    return EXIT_OK


def cmd_report_gaps(args) -> int:
    from .plots import plot_gaps

    spec = args.corpus
    graphs = [G for G in parse_corpus(spec) if isinstance(G, Graph)]
    rows = []
    for i, G in enumerate(graphs):
        k, _ = evc_exact(G)
        bound = evc_lower_bound(G)
        rows.append(
            {
                "instance": i,
                "n": G.n,
                "m": G.m,
                "mvc": mvc_exact(G).size,
                "mvc_X": bound,
                "evc": k,
                "gap": k - bound,
                "chordal": int(is_chordal(G) is not None),
                "cut_vertices": len(block_cut_structure(G).cut_vertices),
            }
        )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "gaps.csv", "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]) if rows else ["instance"])
        writer.writeheader()
        writer.writerows(rows)
    figure = plot_gaps([r["gap"] for r in rows], out / "gaps.png", title=spec)
    hist: dict[str, int] = {}
    for r in rows:
        hist[str(r["gap"])] = hist.get(str(r["gap"]), 0) + 1
    results = {
        "corpus": spec,
        "instances": len(rows),
        "gap_histogram": hist,
        "below_bound": sum(r["gap"] < 0 for r in rows),
        "csv": str(out / "gaps.csv"),
        "figure": str(figure),
    }
    _emit(_report("report gaps", args, {"corpus": spec}, results), args, args._started)
    return EXIT_FALSIFIED if results["below_bound"] else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="human-readable summary on stderr")
    common.add_argument("--timing", action="store_true", help="add wall_time_s to the JSON report")
    common.add_argument("--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("file")
    graph_in.add_argument("--format", choices=FORMATS, default=None, help="default: by file extension")

    parser = argparse.ArgumentParser(prog="evcover", description="Eternal vertex cover toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    evc = sub.add_parser("evc", help="eternal vertex cover number").add_subparsers(dest="mode", required=True)
    p = evc.add_parser("exact", parents=[common, graph_in], help="game solver")
    p.add_argument("--model", choices=[m.value for m in OccupancyModel], default="multi")
    p.add_argument("--forced", help="comma-separated labels that must stay occupied")
    p.add_argument("--show-class", action="store_true", help="list every configuration of the class")
    p.add_argument("--compare-models", action="store_true", help="also solve under the other occupancy model")
    p.set_defaults(func=cmd_evc_exact)
    p = evc.add_parser("fast", parents=[common, graph_in], help="structural evc (chordal / locally connected blocks)")
    p.add_argument("--allow-exact-fallback", action="store_true")
    p.add_argument("--certificate", action="store_true", help="include the per-vertex cover certificate")
    p.set_defaults(func=cmd_evc_fast)

    p = sub.add_parser("mvc", parents=[common, graph_in], help="minimum vertex cover")
    p.add_argument("--forced", help="comma-separated labels the cover must contain")
    p.set_defaults(func=cmd_mvc)

    p = sub.add_parser("decompose", parents=[common, graph_in], help="cut vertices and blocks")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="check a claim over a corpus")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--corpus", help="corpus spec (see evcover.corpus)")
    p.add_argument("--delta", type=int, default=1, help="cutprop: check k = evc .. evc+delta")
    p.add_argument("--model", choices=[m.value for m in OccupancyModel], default="multi")
    p.set_defaults(func=cmd_verify)

    cert = sub.add_parser("certificate", help="certificate tools").add_subparsers(dest="mode", required=True)
    p = cert.add_parser("check", parents=[common, graph_in], help="check a list of covers certifies evc <= k")
    p.add_argument("k", type=int)
    p.add_argument("covers", help="JSON list of label lists")
    p.set_defaults(func=cmd_certificate_check)

    p = sub.add_parser("generate", parents=[common], help="write a random graph")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--density", type=float, default=None, help="kind-specific; interval: average degree")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("scaling", parents=[common], help="time evc_chordal on interval graphs")
    p.add_argument("--sizes", default="1500,3000,6000")
    p.add_argument("--seed", type=int, default=3)
    p.add_argument("--avg-degree", type=float, default=20.0)
    p.add_argument("--out", default="evcover-out")
    p.set_defaults(func=cmd_scaling)

    rep = sub.add_parser("report", help="corpus reports with figures").add_subparsers(dest="mode", required=True)
    p = rep.add_parser("gaps", parents=[common], help="evc - mvc_X over a corpus: CSV + histogram")
    p.add_argument("--corpus", default="all-connected-n6")
    p.add_argument("--out", default="evcover-out")
    p.set_defaults(func=cmd_report_gaps)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._started = time.perf_counter()
    try:
        return args.func(args)
    except (UsageError, ParseError, GraphError, CorpusError, CoverError, StructuralError, OSError) as exc:
        print(f"evcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
