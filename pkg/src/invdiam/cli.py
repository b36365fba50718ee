"""Command-line front end: every run emits one JSON certificate.

Exit codes: 0 completed (any verdict), 1 adverse verification verdict
(reducibility counterexample, invalid certificate), 2 input error,
3 budget exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Tuple

from . import __version__, reducibility
from .assignment import (
    assignment_to_inversions,
    diameter_via_assignment,
    hardest_label,
    min_dim,
    solve,
)
from .certificates import (
    check_certificate,
    counterexample_json,
    levels_to_text,
    parse_levels_text,
)
from .errors import BudgetExceededError, InputFormatError, InvariantError
from .family import (
    build_family,
    probe_bad_cliques,
    probe_clique_independence,
    probe_extension_dichotomy,
    reconstruct_leveled,
)
from .graph import (
    Label,
    Orientation,
    parse_labeled_graph,
    parse_labeled_graphs,
    serialize_labeled_graph,
)
from .inversion import bfs_diameter, bfs_distance, diff_label

EXIT_OK = 0
EXIT_ADVERSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str):
    return parse_labeled_graph(_read(path))


def _assignment_json(assignment) -> List[str]:
    return assignment.to_strings()


def cmd_assign(args) -> Tuple[dict, int]:
    graph, label = _load_graph(args.graph)
    found = solve(graph, label, args.t)
    return {
        "kind": "assign",
        "graph": serialize_labeled_graph(graph, label),
        "label": label.to_string(),
        "t": args.t,
        "assignment": _assignment_json(found) if found else None,
        "verdict": "sat" if found else "unsat",
    }, EXIT_OK


def cmd_mindim(args) -> Tuple[dict, int]:
    graph, label = _load_graph(args.graph)
    t_max = graph.m if args.t_max is None else args.t_max
    d = min_dim(graph, label, t_max)
    witness = solve(graph, label, d) if d is not None else None
    return {
        "kind": "mindim",
        "graph": serialize_labeled_graph(graph, label),
        "label": label.to_string(),
        "t": d if d is not None else t_max,
        "t_max": t_max,
        "assignment": _assignment_json(witness) if witness else None,
        "verdict": "sat" if d is not None else "exceeds",
    }, EXIT_OK


def cmd_distance(args) -> Tuple[dict, int]:
    graph, label = _load_graph(args.graph)
    o1 = Orientation.from_string(graph, _read(args.orientation1))
    o2 = Orientation.from_string(graph, _read(args.orientation2))
    diff = diff_label(o1, o2)
    t_max = graph.m if args.t_max is None else args.t_max
    d = min_dim(graph, diff, t_max)
    if d is None:
        raise InvariantError("distance exceeded t_max = |E|, which is impossible")
    witness = solve(graph, diff, d)
    doc = {
        "kind": "distance",
        "graph": serialize_labeled_graph(graph, label),
        "orientation1": o1.to_string(),
        "orientation2": o2.to_string(),
        "label": diff.to_string(),
        "distance": d,
        "assignment": _assignment_json(witness) if d > 0 else None,
        "inversions": assignment_to_inversions(witness) if d > 0 else [],
        "oracle": None,
    }
    if args.oracle:
        bd = bfs_distance(graph, o1, o2)
        doc["oracle"] = {"bfs_distance": bd, "agree": bd == d}
    return doc, EXIT_OK


def cmd_bfs_diameter(args) -> Tuple[dict, int]:
    graph, label = _load_graph(args.graph)
    return {
        "kind": "bfs-diameter",
        "graph": serialize_labeled_graph(graph, label),
        "diameter": bfs_diameter(graph),
    }, EXIT_OK


def cmd_diameter(args) -> Tuple[dict, int]:
    graph, label = _load_graph(args.graph)
    t_max = graph.m if args.t_max is None else args.t_max
    doc = {
        "kind": "diameter",
        "graph": serialize_labeled_graph(graph, label),
        "engine": args.engine,
        "assign": None,
        "bfs": None,
        "agree": None,
    }
    if args.engine in ("assign", "both"):
        result = diameter_via_assignment(graph, t_max)
        doc["assign"] = {
            "diameter": result.diameter,
            "hardest_label": result.hardest_label.to_string(),
            "assignment": _assignment_json(result.witness),
        }
        doc["diameter"] = result.diameter
    if args.engine in ("bfs", "both"):
        doc["bfs"] = {"diameter": bfs_diameter(graph)}
        doc["diameter"] = doc["bfs"]["diameter"]
    if args.engine == "both":
        doc["agree"] = doc["assign"]["diameter"] == doc["bfs"]["diameter"]
        if not doc["agree"]:
            raise InvariantError("assignment and BFS diameters disagree")
    return doc, EXIT_OK


def cmd_family(args) -> Tuple[dict, int]:
    lg = build_family(args.k, args.m, args.initial_label)
    graph_text = serialize_labeled_graph(lg.graph, lg.label)
    levels_text = levels_to_text(lg.levels)
    files = {}
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8") as fh:
            fh.write(graph_text + "\n")
        files["graph"] = args.graph_out
    if args.levels_out:
        with open(args.levels_out, "w", encoding="utf-8") as fh:
            fh.write(levels_text + "\n")
        files["levels"] = args.levels_out
    m0 = args.k * (args.k - 1) // 2
    initial = args.initial_label if args.initial_label is not None else "0" * m0
    return {
        "kind": "family",
        "k": args.k,
        "m": args.m,
        "initial_label": initial,
        "vertices": lg.graph.n,
        "edges": lg.graph.m,
        "graph": graph_text,
        "levels": levels_text,
        "files": files or None,
    }, EXIT_OK


def cmd_probe(args) -> Tuple[dict, int]:
    graph, label = _load_graph(args.graph)
    levels = parse_levels_text(_read(args.levels), graph.n)
    cert = json.loads(_read(args.assignment))
    strings = cert["assignment"] if isinstance(cert, dict) else cert
    if strings is None:
        raise InputFormatError("assignment certificate carries no witness")
    from .assignment import Assignment

    assignment = Assignment.from_strings(graph, strings)
    lg = reconstruct_leveled(graph, label, levels, args.k)
    ind = probe_clique_independence(lg, assignment)
    dich = probe_extension_dichotomy(lg, assignment)
    bad = probe_bad_cliques(lg, assignment)
    return {
        "kind": "probe",
        "k": lg.k,
        "m": lg.m,
        "graph": serialize_labeled_graph(graph, label),
        "levels": levels_to_text(levels),
        "assignment": strings,
        "clique_independence": {
            "checked": ind.checked,
            "failures": [list(map(list, f)) for f in ind.failures],
            "passed": ind.passed,
        },
        "extension_dichotomy": {
            "checked": dich.checked,
            "failures": [list(map(list, f)) for f in dich.failures],
            "passed": dich.passed,
        },
        "bad_cliques": {
            "checked": bad.checked,
            "bad": [list(c) for c in bad.bad],
        },
    }, EXIT_OK


def cmd_reduce(args) -> Tuple[dict, int]:
    configs = reducibility.builtin_configs()
    if args.config:
        if args.config not in configs:
            raise InputFormatError(f"unknown configuration {args.config!r}")
        names = [args.config]
    else:
        names = list(configs)
    if args.mutate:
        muts = reducibility.builtin_mutations()
        if args.mutate not in muts:
            raise InputFormatError(f"unknown mutation {args.mutate!r}")
        target = muts[args.mutate].config
        if args.config and args.config != target:
            raise InputFormatError(
                f"mutation {args.mutate!r} targets {target}, not {args.config}"
            )
        names = [target]
    report = reducibility.run_suite(names, mutation=args.mutate, jobs=args.jobs)
    rows = []
    for row in report.rows:
        base_name = row.name.split("[")[0]
        cfg = configs[base_name]
        if args.mutate:
            cfg = reducibility.apply_mutation(cfg, args.mutate)
        entry = {
            "name": row.name,
            "verdict": row.verdict,
            "label_count": row.label_count,
            "family_count": row.family_count,
            "wall_s": round(row.wall_s, 3),
            "counterexample": None,
        }
        if row.counterexample is not None:
            entry["counterexample"] = counterexample_json(
                base_name, args.mutate, row.counterexample, cfg.graph
            )
        rows.append(entry)
    doc = {
        "kind": "reduce",
        "mutation": args.mutate,
        "configs": rows,
        "suite_pass": report.passed,
    }
    if args.pretty:
        for row in rows:
            print(
                f"{row['name']:<40} {row['verdict']:<16} labels={row['label_count']:<6}"
                f" families={row['family_count']:<10} {row['wall_s']:.2f}s",
                file=sys.stderr,
            )
    return doc, EXIT_OK if report.passed else EXIT_ADVERSE


def cmd_search_hard(args) -> Tuple[dict, int]:
    text = _read(args.graphs)
    entries = []
    for graph, _ in parse_labeled_graphs(text):
        result = hardest_label(graph, args.t_max, args.budget, args.seed)
        witness = (
            solve(graph, result.label, result.dim)
            if result.dim is not None and result.dim > 0
            else None
        )
        entries.append(
            {
                "graph": serialize_labeled_graph(graph, Label(graph, 0)),
                "label": result.label.to_string(),
                "min_dim": result.dim,
                "assignment": _assignment_json(witness) if witness else None,
                "exhaustive": result.exhaustive,
                "evaluations": result.evaluations,
            }
        )
    return {
        "kind": "search-hard",
        "t_max": args.t_max,
        "budget": args.budget,
        "seed": args.seed,
        "entries": entries,
    }, EXIT_OK


def cmd_check(args) -> Tuple[dict, int]:
    try:
        doc = json.loads(_read(args.certificate))
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"not valid JSON: {exc}") from None
    valid, kind, notes = check_certificate(doc)
    return {
        "kind": "check",
        "target_kind": kind,
        "valid": valid,
        "notes": notes,
    }, EXIT_OK if valid else EXIT_ADVERSE


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the JSON document here instead of stdout")
    p.add_argument("--pretty", action="store_true", help="indent JSON; print summary tables to stderr")
    p.add_argument("--no-meta", action="store_true", help="omit timestamps and wall times")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invdiam",
        description="Exact computation and verification for graph orientation inversions.",
    )
    parser.add_argument("--version", action="version", version=f"invdiam {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("assign", help="solve for a fixed-dimension vector assignment")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(handler=cmd_assign)
    _add_common(p)

    p = sub.add_parser("mindim", help="least dimension admitting an assignment")
    p.add_argument("graph")
    p.add_argument("--t-max", type=int, default=None)
    p.set_defaults(handler=cmd_mindim)
    _add_common(p)

    p = sub.add_parser("distance", help="inversion distance between two orientations")
    p.add_argument("graph")
    p.add_argument("orientation1")
    p.add_argument("orientation2")
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--oracle", action="store_true", help="also run BFS and compare")
    p.set_defaults(handler=cmd_distance)
    _add_common(p)

    p = sub.add_parser("bfs-diameter", help="diameter by exhaustive BFS")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_bfs_diameter)
    _add_common(p)

    p = sub.add_parser("diameter", help="inversion diameter")
    p.add_argument("graph")
    p.add_argument("--engine", choices=("assign", "bfs", "both"), default="assign")
    p.add_argument("--t-max", type=int, default=None)
    p.set_defaults(handler=cmd_diameter)
    _add_common(p)

    p = sub.add_parser("family", help="build a leveled clique-expansion family")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--initial-label", default=None, help="bits for the base clique edges")
    p.add_argument("--graph-out")
    p.add_argument("--levels-out")
    p.set_defaults(handler=cmd_family)
    _add_common(p)

    p = sub.add_parser("probe", help="run family lemma probes on an assignment")
    p.add_argument("graph")
    p.add_argument("--levels", required=True)
    p.add_argument("--assignment", required=True, help="JSON certificate with a witness")
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(handler=cmd_probe)
    _add_common(p)

    p = sub.add_parser("reduce", help="run reducibility configuration checks")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--config")
    group.add_argument("--all", action="store_true")
    p.add_argument("--mutate", default=None, help="apply a named constraint-dropping control")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=cmd_reduce)
    _add_common(p)

    p = sub.add_parser("search-hard", help="search labels maximizing min_dim per graph")
    p.add_argument("graphs", help="file of blank-line separated labeled graphs")
    p.add_argument("--t-max", type=int, default=4)
    p.add_argument("--budget", type=int, default=2048)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_search_hard)
    _add_common(p)

    p = sub.add_parser("check", help="re-validate an emitted certificate")
    p.add_argument("certificate")
    p.set_defaults(handler=cmd_check)
    _add_common(p)

    return parser


def _meta(args, started: float) -> dict:
    meta = {"tool": "invdiam", "version": __version__}
    for key in ("seed", "budget", "t", "t_max", "k", "m", "jobs", "engine"):
        if hasattr(args, key) and getattr(args, key) is not None:
            meta[key] = getattr(args, key)
    if not args.no_meta:
        meta["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S", time.gmtime())
        meta["wall_s"] = round(time.monotonic() - started, 3)
    return meta


def _strip_timings(doc: dict) -> None:
    if doc.get("kind") == "reduce":
        for row in doc.get("configs", []):
            row.pop("wall_s", None)


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, indent=2 if args.pretty else None, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        doc, code = args.handler(args)
    except InputFormatError as exc:
        _emit({"kind": "error", "error": str(exc), "category": "input"}, args)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        _emit({"kind": "error", "error": str(exc), "category": "budget"}, args)
        return EXIT_BUDGET
    except InvariantError as exc:
        _emit({"kind": "error", "error": str(exc), "category": "invariant"}, args)
        return EXIT_INVARIANT
    doc["meta"] = _meta(args, started)
    if args.no_meta:
        _strip_timings(doc)
    _emit(doc, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
