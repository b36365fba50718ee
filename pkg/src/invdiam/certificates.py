"""Building and re-validating the JSON certificates the CLI emits.

Re-validation is witness-oriented: embedded witnesses (assignments,
inversion sequences, counterexample families) are checked directly, and
negative verdicts that would require re-running a search are accepted
with an explanatory note.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from . import reducibility
from .assignment import Assignment, verify
from .errors import InputFormatError
from .family import build_family, reconstruct_leveled
from .family import probe_bad_cliques, probe_clique_independence, probe_extension_dichotomy
from .gf2 import Gf2Vector
from .graph import Graph, Label, Orientation, parse_labeled_graph, serialize_labeled_graph
from .inversion import invert


def levels_to_text(levels) -> str:
    return "\n".join(f"{v} {lvl}" for v, lvl in enumerate(levels))


def parse_levels_text(text: str, n: int) -> Tuple[int, ...]:
    levels = [-1] * n
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError(f"levels line must be 'v level', got {line!r}")
        try:
            v, lvl = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(f"levels line must be integers, got {line!r}") from None
        if not 0 <= v < n:
            raise InputFormatError(f"levels vertex {v} out of range")
        if levels[v] >= 0:
            raise InputFormatError(f"duplicate level for vertex {v}")
        levels[v] = lvl
    if any(l < 0 for l in levels):
        raise InputFormatError("levels file does not cover every vertex")
    return tuple(levels)


def family_json(cfg_family: reducibility.BoundaryFamily) -> dict:
    return {
        "candidates": [
            [Gf2Vector(3, v).to_string() for v in cset]
            for cset in cfg_family.candidates
        ],
        "designated": [Gf2Vector(3, v).to_string() for v in cfg_family.designated],
    }


def family_from_json(doc: dict) -> reducibility.BoundaryFamily:
    return reducibility.BoundaryFamily(
        tuple(
            tuple(Gf2Vector.from_string(s).bits for s in cset)
            for cset in doc["candidates"]
        ),
        tuple(Gf2Vector.from_string(s).bits for s in doc["designated"]),
    )


def counterexample_json(
    cfg_name: str, mutation: Optional[str], cex: reducibility.Counterexample, graph: Graph
) -> dict:
    doc: dict = {
        "config": cfg_name,
        "mutation": mutation,
        "stage": cex.stage,
        "labels": Label(graph, cex.labels).to_string(),
    }
    if cex.family is not None:
        doc["family"] = family_json(cex.family)
    if cex.choice_instance is not None:
        inst = cex.choice_instance
        doc["choice_instance"] = {
            "t": inst["t"],
            "multi_sets": [
                [Gf2Vector(3, v).to_string() for v in s] for s in inst["multi_sets"]
            ],
            "singles": [Gf2Vector(3, v).to_string() for v in inst["singles"]],
        }
    return doc


class CheckResult:
    def __init__(self) -> None:
        self.valid = True
        self.notes: List[str] = []

    def note(self, message: str) -> None:
        self.notes.append(message)

    def fail(self, message: str) -> None:
        self.valid = False
        self.notes.append(f"FAIL: {message}")

    def require(self, condition: bool, message: str) -> bool:
        if not condition:
            self.fail(message)
        return condition


def _graph_and_label(doc: dict) -> Tuple[Graph, Label]:
    graph, file_label = parse_labeled_graph(doc["graph"])
    if "label" in doc and doc["label"] is not None:
        return graph, Label.from_string(graph, doc["label"])
    return graph, file_label


def _read_assignment(graph: Graph, strings) -> Assignment:
    return Assignment.from_strings(graph, list(strings))


def _check_assign_like(doc: dict, res: CheckResult) -> None:
    graph, label = _graph_and_label(doc)
    verdict = doc["verdict"]
    if verdict == "sat":
        assignment = _read_assignment(graph, doc["assignment"])
        if res.require(assignment.t == doc["t"], "witness dimension differs from t"):
            res.require(verify(graph, label, assignment), "witness fails an edge equation")
    elif verdict in ("unsat", "exceeds"):
        res.require(doc.get("assignment") is None, f"{verdict} verdict carries a witness")
        res.note(f"{verdict} verdict accepted without re-search")
    else:
        res.fail(f"unknown verdict {verdict!r}")


def _check_distance(doc: dict, res: CheckResult) -> None:
    graph, _ = _graph_and_label(doc)
    o1 = Orientation.from_string(graph, doc["orientation1"])
    o2 = Orientation.from_string(graph, doc["orientation2"])
    diff = Label.from_string(graph, doc["label"])
    res.require(diff.bits == o1.flips ^ o2.flips, "diff label does not match orientations")
    d = doc["distance"]
    if d == 0:
        res.require(diff.bits == 0, "zero distance with differing orientations")
    else:
        assignment = _read_assignment(graph, doc["assignment"])
        if res.require(assignment.t == d, "witness dimension differs from distance"):
            res.require(verify(graph, diff, assignment), "witness fails an edge equation")
        current = o1
        for xs in doc["inversions"]:
            current = invert(current, xs)
        res.require(current == o2, "inversion sequence does not reach the target")
        res.require(len(doc["inversions"]) == d, "inversion count differs from distance")
    oracle = doc.get("oracle")
    if oracle is not None:
        res.require(
            oracle["agree"] == (oracle["bfs_distance"] == d),
            "oracle agreement flag is inconsistent",
        )
        res.require(oracle["agree"], "engines disagree")


def _check_diameter(doc: dict, res: CheckResult) -> None:
    graph, _ = _graph_and_label(doc)
    assign_part = doc.get("assign")
    if assign_part is not None:
        label = Label.from_string(graph, assign_part["hardest_label"])
        witness = _read_assignment(graph, assign_part["assignment"])
        if res.require(
            witness.t == assign_part["diameter"],
            "witness dimension differs from diameter",
        ):
            res.require(verify(graph, label, witness), "witness fails an edge equation")
    bfs_part = doc.get("bfs")
    if assign_part is not None and bfs_part is not None:
        res.require(
            doc.get("agree") == (assign_part["diameter"] == bfs_part["diameter"]),
            "agreement flag is inconsistent",
        )
    if bfs_part is not None and assign_part is None:
        res.note("bfs-only diameter accepted without re-search")


def _check_family_cert(doc: dict, res: CheckResult) -> None:
    lg = build_family(doc["k"], doc["m"], doc["initial_label"])
    res.require(
        serialize_labeled_graph(lg.graph, lg.label) == doc["graph"],
        "rebuilt family graph differs",
    )
    res.require(levels_to_text(lg.levels) == doc["levels"], "rebuilt levels differ")


def _check_probe_cert(doc: dict, res: CheckResult) -> None:
    graph, label = _graph_and_label(doc)
    levels = parse_levels_text(doc["levels"], graph.n)
    lg = reconstruct_leveled(graph, label, levels, doc["k"])
    assignment = _read_assignment(graph, doc["assignment"])
    ind = probe_clique_independence(lg, assignment)
    dich = probe_extension_dichotomy(lg, assignment)
    bad = probe_bad_cliques(lg, assignment)
    res.require(
        ind.passed == doc["clique_independence"]["passed"]
        and ind.checked == doc["clique_independence"]["checked"],
        "clique independence report differs on re-run",
    )
    res.require(
        dich.passed == doc["extension_dichotomy"]["passed"]
        and dich.checked == doc["extension_dichotomy"]["checked"],
        "extension dichotomy report differs on re-run",
    )
    res.require(
        [list(c) for c in bad.bad] == doc["bad_cliques"]["bad"],
        "bad clique listing differs on re-run",
    )


def _check_reduce(doc: dict, res: CheckResult) -> None:
    configs = reducibility.builtin_configs()
    for row in doc["configs"]:
        cex = row.get("counterexample")
        if row["verdict"] == "reducible":
            if cex is not None:
                res.fail(f"{row['name']}: reducible verdict carries a counterexample")
            continue
        if not res.require(cex is not None, f"{row['name']}: counterexample missing"):
            continue
        base = configs.get(cex["config"])
        if not res.require(base is not None, f"unknown config {cex['config']!r}"):
            continue
        cfg = base
        if cex.get("mutation"):
            cfg = reducibility.apply_mutation(cfg, cex["mutation"])
        labels = Label.from_string(cfg.graph, cex["labels"]).bits
        if cex["stage"] == "main":
            fam = family_from_json(cex["family"])
            try:
                witness = reducibility.check_family(cfg, labels, fam)
            except ValueError as exc:
                res.fail(f"{row['name']}: counterexample family invalid: {exc}")
                continue
            res.require(
                witness is None, f"{row['name']}: counterexample family has a witness"
            )
        elif cex["stage"] == "choice":
            inst = cex["choice_instance"]
            multi = [
                tuple(Gf2Vector.from_string(s).bits for s in ms)
                for ms in inst["multi_sets"]
            ]
            singles = [Gf2Vector.from_string(s).bits for s in inst["singles"]]
            t = inst["t"]
            b = len(cfg.boundary)
            feasible = False
            for x0 in multi[0]:
                for xt in multi[1]:
                    values = [0] * b
                    values[0] = x0
                    values[t] = xt
                    it = iter(singles)
                    for i in range(1, b):
                        if i != t:
                            values[i] = next(it)
                    if not reducibility._is_double_pair(values):
                        feasible = True
            res.require(
                not feasible, f"{row['name']}: choice counterexample admits a choice"
            )
        else:
            res.fail(f"{row['name']}: unknown counterexample stage {cex['stage']!r}")


def _check_search_hard(doc: dict, res: CheckResult) -> None:
    for i, entry in enumerate(doc["entries"]):
        graph, _ = parse_labeled_graph(entry["graph"])
        label = Label.from_string(graph, entry["label"])
        if entry["min_dim"] is None:
            res.note(f"entry {i}: above-t_max verdict accepted without re-search")
            continue
        if entry["min_dim"] == 0:
            res.require(label.bits == 0, f"entry {i}: nonzero label with min_dim 0")
            continue
        assignment = _read_assignment(graph, entry["assignment"])
        if res.require(
            assignment.t == entry["min_dim"],
            f"entry {i}: witness dimension differs from min_dim",
        ):
            res.require(
                verify(graph, label, assignment),
                f"entry {i}: witness fails an edge equation",
            )


_CHECKERS = {
    "assign": _check_assign_like,
    "mindim": _check_assign_like,
    "distance": _check_distance,
    "bfs-diameter": lambda doc, res: res.note("bfs result accepted without re-search"),
    "diameter": _check_diameter,
    "family": _check_family_cert,
    "probe": _check_probe_cert,
    "reduce": _check_reduce,
    "search-hard": _check_search_hard,
}


def check_certificate(doc: dict) -> Tuple[bool, str, List[str]]:
    """Re-validate an emitted certificate; returns (valid, kind, notes)."""
    kind = doc.get("kind")
    checker = _CHECKERS.get(kind)
    res = CheckResult()
    if checker is None:
        res.fail(f"unknown certificate kind {kind!r}")
        return res.valid, str(kind), res.notes
    try:
        checker(doc, res)
    except (KeyError, TypeError, ValueError, InputFormatError) as exc:
        res.fail(f"malformed certificate: {exc}")
    return res.valid, kind, res.notes


__all__ = [
    "check_certificate",
    "counterexample_json",
    "family_json",
    "family_from_json",
    "levels_to_text",
    "parse_levels_text",
    "CheckResult",
]
