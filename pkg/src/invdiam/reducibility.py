"""Exhaustive re-verification of local reducibility configurations.

A configuration describes an induced subgraph H, its boundary vertices
(pairwise nonadjacent, each with designated current values drawn from a
candidate set), partially fixed edge labels, and side constraints the
candidate sets are known to satisfy.  The subgraph is *reducible* when
every admissible label completion and every admissible boundary family
admits a 3-dimensional vector assignment of H plus boundary that picks
boundary vectors from their candidate sets.

Witness existence is monotone in the candidate sets, so the universal
check only needs families whose sets sit at the constraint lower bounds;
forced members are kept and the rest filled up to that minimum.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, replace
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import gf2
from .graph import Graph

DIM = 3
ALL_VECTORS = tuple(range(1 << DIM))
NONZERO_VECTORS = tuple(range(1, 1 << DIM))

EXCLUDE_NEVER = "never"
EXCLUDE_ALWAYS = "always"
EXCLUDE_IF_ALL_ZERO = "if-all-zero"


@dataclass(frozen=True)
class BoundaryRule:
    """Constraints on one boundary vertex's candidate set and current value.

    exclude_zero is one of "never", "always", or "if-all-zero"; the last
    drops the zero vector whenever every edge listed in zero_edges is
    labeled zero.
    """

    min_size: int
    exclude_zero: str = EXCLUDE_NEVER
    zero_edges: Tuple[int, ...] = ()
    include_zero: bool = False
    designated_nonzero: bool = False

    def __post_init__(self) -> None:
        if self.exclude_zero not in (EXCLUDE_NEVER, EXCLUDE_ALWAYS, EXCLUDE_IF_ALL_ZERO):
            raise ValueError(f"unknown exclude_zero mode {self.exclude_zero!r}")
        if self.exclude_zero == EXCLUDE_IF_ALL_ZERO and not self.zero_edges:
            raise ValueError("conditional zero exclusion needs zero_edges")
        if self.min_size < 1:
            raise ValueError("min_size must be at least 1")

    def excludes_zero(self, labels: int) -> bool:
        if self.exclude_zero == EXCLUDE_ALWAYS:
            return True
        if self.exclude_zero == EXCLUDE_IF_ALL_ZERO:
            return all(not (labels >> e) & 1 for e in self.zero_edges)
        return False


@dataclass(frozen=True)
class ReducibilityConfiguration:
    """A local structure H with boundary candidate-set constraints."""

    name: str
    graph: Graph
    h_vertices: Tuple[int, ...]
    boundary: Tuple[int, ...]
    fixed_labels: Tuple[Tuple[int, int], ...]  # (edge index, bit)
    required_one_groups: Tuple[Tuple[int, ...], ...] = ()
    rules: Tuple[BoundaryRule, ...] = ()
    linking: Optional[str] = None  # "equalize-to-first" | "no-double-pair"
    choice_stage: bool = False
    choice_multi_min: int = 2

    def __post_init__(self) -> None:
        g = self.graph
        hset = set(self.h_vertices)
        bset = set(self.boundary)
        if hset & bset:
            raise ValueError("H and boundary overlap")
        if hset | bset != set(range(g.n)):
            raise ValueError("H plus boundary must cover all vertices")
        if len(self.rules) != len(self.boundary):
            raise ValueError("one rule per boundary vertex required")
        for u in self.boundary:
            if not g.adjacency[u] & hset:
                raise ValueError(f"boundary vertex {u} has no edge into H")
            if g.adjacency[u] & bset:
                raise ValueError(f"boundary vertices {u} adjacency violates independence")
        fixed = dict(self.fixed_labels)
        if len(fixed) != len(self.fixed_labels):
            raise ValueError("duplicate fixed label")
        for e, b in fixed.items():
            if not 0 <= e < g.m or b not in (0, 1):
                raise ValueError(f"bad fixed label ({e}, {b})")
        for group in self.required_one_groups:
            for e in group:
                if not 0 <= e < g.m:
                    raise ValueError(f"admissibility group references edge {e}")
        for rule in self.rules:
            if rule.include_zero and rule.excludes_zero(0) and rule.exclude_zero != EXCLUDE_IF_ALL_ZERO:
                raise ValueError("rule both forces and excludes the zero vector")

    # -- labels ------------------------------------------------------------

    def free_edges(self) -> Tuple[int, ...]:
        fixed = dict(self.fixed_labels)
        return tuple(e for e in range(self.graph.m) if e not in fixed)

    def label_completions(self, order: str = "lex") -> Iterator[int]:
        """All label words with the fixed bits set, free bits enumerated
        ascending ("lex") or descending ("reversed")."""
        base = 0
        for e, b in self.fixed_labels:
            base |= b << e
        free = self.free_edges()
        values = range(1 << len(free))
        if order == "reversed":
            values = reversed(values)
        elif order != "lex":
            raise ValueError(f"unknown label order {order!r}")
        for val in values:
            word = base
            for i, e in enumerate(free):
                if (val >> i) & 1:
                    word |= 1 << e
            yield word

    def admissible(self, labels: int) -> bool:
        return all(
            any((labels >> e) & 1 for e in group) for group in self.required_one_groups
        )

    # -- families ----------------------------------------------------------

    def vector_universe(self, i: int, labels: int) -> Tuple[int, ...]:
        rule = self.rules[i]
        if rule.excludes_zero(labels):
            return NONZERO_VECTORS
        return ALL_VECTORS

    def candidate_sets(self, i: int, labels: int) -> List[Tuple[int, ...]]:
        """Minimum-cardinality candidate sets for boundary vertex i, in
        lexicographic order."""
        rule = self.rules[i]
        universe = self.vector_universe(i, labels)
        forced: Tuple[int, ...] = (0,) if rule.include_zero else ()
        if forced and 0 not in universe:
            return []
        fill = rule.min_size - len(forced)
        pool = tuple(v for v in universe if v not in forced)
        if fill < 0 or fill > len(pool):
            return []
        return [tuple(sorted(forced + combo)) for combo in combinations(pool, fill)]

    def designated_options(self, i: int, candidate_set: Tuple[int, ...]) -> Tuple[int, ...]:
        rule = self.rules[i]
        if rule.designated_nonzero:
            return tuple(v for v in candidate_set if v != 0)
        return candidate_set

    def linking_ok(self, designated: Sequence[int]) -> bool:
        if self.linking is None:
            return True
        if self.linking == "equalize-to-first":
            # If every later value coincides, the first must coincide too.
            rest = designated[1:]
            if len(set(rest)) == 1 and designated[0] != rest[0]:
                return False
            return True
        if self.linking == "no-double-pair":
            return not _is_double_pair(designated)
        raise ValueError(f"unknown linking rule {self.linking!r}")

    def validate_family(self, labels: int, fam: "BoundaryFamily") -> None:
        if len(fam.candidates) != len(self.boundary) or len(fam.designated) != len(
            self.boundary
        ):
            raise ValueError("family arity does not match the boundary")
        for i, (cset, f) in enumerate(zip(fam.candidates, fam.designated)):
            rule = self.rules[i]
            if f not in cset:
                raise ValueError(f"designated value {f} outside candidate set {cset}")
            if len(set(cset)) != len(cset) or tuple(sorted(cset)) != cset:
                raise ValueError(f"candidate set {cset} not sorted/distinct")
            if len(cset) < rule.min_size:
                raise ValueError(f"candidate set {cset} below minimum {rule.min_size}")
            if rule.excludes_zero(labels) and 0 in cset:
                raise ValueError(f"candidate set {cset} must exclude the zero vector")
            if rule.include_zero and 0 not in cset:
                raise ValueError(f"candidate set {cset} must include the zero vector")
            if rule.designated_nonzero and f == 0:
                raise ValueError("designated value must be nonzero")
            if any(not 0 <= v < (1 << DIM) for v in cset):
                raise ValueError(f"candidate set {cset} outside F2^{DIM}")
        if not self.linking_ok(fam.designated):
            raise ValueError("designated values violate the linking rule")


@dataclass(frozen=True)
class BoundaryFamily:
    """Per boundary vertex: a candidate set and its designated value."""

    candidates: Tuple[Tuple[int, ...], ...]
    designated: Tuple[int, ...]


def _is_double_pair(values: Sequence[int]) -> bool:
    """True iff the four values split into two equal pairs."""
    s = sorted(values)
    return len(s) == 4 and s[0] == s[1] and s[2] == s[3]


def enumerate_families(
    cfg: ReducibilityConfiguration, labels: int
) -> Iterator[BoundaryFamily]:
    """Minimum-cardinality families in lexicographic (set, value) order."""
    if not cfg.admissible(labels):
        raise ValueError("label completion violates the admissibility predicate")
    per_vertex: List[List[Tuple[Tuple[int, ...], int]]] = []
    for i in range(len(cfg.boundary)):
        pairs = [
            (cset, f)
            for cset in cfg.candidate_sets(i, labels)
            for f in cfg.designated_options(i, cset)
        ]
        per_vertex.append(pairs)
    for chosen in product(*per_vertex):
        designated = tuple(f for _, f in chosen)
        if not cfg.linking_ok(designated):
            continue
        yield BoundaryFamily(tuple(c for c, _ in chosen), designated)


# -- witness search ---------------------------------------------------------


def _search_assignment(
    graph: Graph,
    labels: int,
    order: Sequence[int],
    domains: Dict[int, Sequence[int]],
) -> Optional[Dict[int, int]]:
    """First assignment (in the given vertex/value order) satisfying every
    edge label, or None."""
    chosen: Dict[int, int] = {}

    def fits(v: int, word: int) -> bool:
        for w in graph.adjacency[v]:
            if w in chosen:
                e = graph.edge_index(v, w)
                if gf2.dot_bits(word, chosen[w]) != (labels >> e) & 1:
                    return False
        return True

    def descend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for word in domains[v]:
            if fits(v, word):
                chosen[v] = word
                if descend(pos + 1):
                    return True
                del chosen[v]
        return False

    return dict(chosen) if descend(0) else None


def check_family(
    cfg: ReducibilityConfiguration, labels: int, fam: BoundaryFamily
) -> Optional[Dict[int, int]]:
    """Search for a witness assignment with boundary vectors drawn from the
    family's candidate sets; None means the family is stuck."""
    if not cfg.admissible(labels):
        raise ValueError("label completion violates the admissibility predicate")
    cfg.validate_family(labels, fam)
    order = list(cfg.boundary) + sorted(cfg.h_vertices)
    domains: Dict[int, Sequence[int]] = {
        u: fam.candidates[i] for i, u in enumerate(cfg.boundary)
    }
    for v in cfg.h_vertices:
        domains[v] = ALL_VECTORS
    return _search_assignment(cfg.graph, labels, order, domains)


class _InnerOracle:
    """Memoized existence of an H-interior extension for fixed boundary vectors."""

    def __init__(self, cfg: ReducibilityConfiguration):
        self.cfg = cfg
        self.h_order = sorted(cfg.h_vertices)
        self.cache: Dict[Tuple[int, Tuple[int, ...]], bool] = {}

    def exists(self, labels: int, boundary_vectors: Tuple[int, ...]) -> bool:
        key = (labels, boundary_vectors)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        domains: Dict[int, Sequence[int]] = {
            u: (w,) for u, w in zip(self.cfg.boundary, boundary_vectors)
        }
        for v in self.h_order:
            domains[v] = ALL_VECTORS
        found = (
            _search_assignment(
                self.cfg.graph, labels, list(self.cfg.boundary) + self.h_order, domains
            )
            is not None
        )
        self.cache[key] = found
        return found


def _designated_count_and_first(
    cfg: ReducibilityConfiguration, bcombo: Sequence[Tuple[int, ...]]
) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Number of valid designated-value tuples for the candidate sets, and
    the lexicographically first one."""
    options = [
        cfg.designated_options(i, cset) for i, cset in enumerate(bcombo)
    ]
    if any(not opts for opts in options):
        return 0, None
    if cfg.linking is None:
        count = 1
        for opts in options:
            count *= len(opts)
        return count, tuple(opts[0] for opts in options)
    count = 0
    first: Optional[Tuple[int, ...]] = None
    for designated in product(*options):
        if cfg.linking_ok(designated):
            if first is None:
                first = designated
            count += 1
    return count, first


@dataclass(frozen=True)
class Counterexample:
    stage: str  # "main" | "choice"
    labels: int
    family: Optional[BoundaryFamily]
    choice_instance: Optional[dict] = None


@dataclass(frozen=True)
class CheckReport:
    name: str
    verdict: str  # "reducible" | "counterexample"
    label_count: int
    family_count: int
    wall_s: float
    counterexample: Optional[Counterexample] = None

    @property
    def reducible(self) -> bool:
        return self.verdict == "reducible"


def _check_choice_stage(
    cfg: ReducibilityConfiguration,
) -> Tuple[int, Optional[Counterexample]]:
    """Verify the pre-step of the singleton configurations derived from a
    cycle with one multi-candidate pair: for each nonadjacent partner t,
    every candidate-set combination admits a choice that is not two equal
    pairs.  Returns (combinations checked, first failure)."""
    b = len(cfg.boundary)
    checked = 0
    multi_sets = list(combinations(NONZERO_VECTORS, cfg.choice_multi_min))
    for t in range(1, b):
        for b0 in multi_sets:
            for bt in multi_sets:
                for singles in product(NONZERO_VECTORS, repeat=b - 2):
                    checked += 1
                    ok = False
                    for x0 in b0:
                        for xt in bt:
                            values = [0] * b
                            values[0] = x0
                            values[t] = xt
                            si = iter(singles)
                            for i in range(1, b):
                                if i != t:
                                    values[i] = next(si)
                            if not _is_double_pair(values):
                                ok = True
                                break
                        if ok:
                            break
                    if not ok:
                        labels = next(cfg.label_completions())
                        return checked, Counterexample(
                            "choice",
                            labels,
                            None,
                            {
                                "t": t,
                                "multi_sets": [list(b0), list(bt)],
                                "singles": list(singles),
                            },
                        )
    return checked, None


def _scan_labels(
    cfg: ReducibilityConfiguration,
    label_words: Sequence[int],
) -> Tuple[int, int, Optional[Counterexample]]:
    """Scan complete label words; returns (labels, families, counterexample).

    A candidate-set combination needs a witness only if some valid
    designated tuple realizes it, and witness existence never depends on
    the designated values, so those are counted arithmetically and only
    materialized for a counterexample.
    """
    oracle = _InnerOracle(cfg)
    b = len(cfg.boundary)
    labels_checked = 0
    families_checked = 0
    for labels in label_words:
        if not cfg.admissible(labels):
            continue
        labels_checked += 1
        per_vertex_sets = [cfg.candidate_sets(i, labels) for i in range(b)]
        if any(not sets for sets in per_vertex_sets):
            continue
        for bcombo in product(*per_vertex_sets):
            count, first = _designated_count_and_first(cfg, bcombo)
            if count == 0:
                continue
            families_checked += count
            witness = False
            for tup in product(*bcombo):
                if oracle.exists(labels, tup):
                    witness = True
                    break
            if not witness:
                assert first is not None
                fam = BoundaryFamily(tuple(bcombo), first)
                return (
                    labels_checked,
                    families_checked,
                    Counterexample("main", labels, fam),
                )
    return labels_checked, families_checked, None


def _scan_labels_task(args) -> Tuple[int, int, Optional[Counterexample]]:
    cfg, words = args
    return _scan_labels(cfg, words)


def check_reducible(
    cfg: ReducibilityConfiguration,
    label_order: str = "lex",
    jobs: int = 1,
) -> CheckReport:
    """Exhaustively confirm reducibility, or return the first failing pair.

    The counterexample, when present, is the first in (label word,
    candidate sets, designated values) lexicographic order for the given
    label direction; the verdict itself does not depend on the order.
    """
    start = time.monotonic()
    family_count = 0
    if cfg.choice_stage:
        checked, failure = _check_choice_stage(cfg)
        family_count += checked
        if failure is not None:
            return CheckReport(
                cfg.name,
                "counterexample",
                0,
                family_count,
                time.monotonic() - start,
                failure,
            )
    words = list(cfg.label_completions(label_order))
    if jobs > 1 and len(words) > 1:
        chunks = [words[i::jobs] for i in range(jobs)]
        # Round-robin chunks preserve a deterministic merge: results are
        # re-ranked by the position of their counterexample label.
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            results = pool.map(_scan_labels_task, [(cfg, c) for c in chunks])
        labels_checked = sum(r[0] for r in results)
        family_count += sum(r[1] for r in results)
        ranked = [
            (words.index(r[2].labels), r[2])
            for r in results
            if r[2] is not None
        ]
        cex = min(ranked)[1] if ranked else None
    else:
        labels_checked, fams, cex = _scan_labels(cfg, words)
        family_count += fams
    if cex is not None:
        return CheckReport(
            cfg.name,
            "counterexample",
            labels_checked,
            family_count,
            time.monotonic() - start,
            cex,
        )
    return CheckReport(
        cfg.name, "reducible", labels_checked, family_count, time.monotonic() - start
    )


# -- builtin configurations --------------------------------------------------


def _cfg_k4minus() -> ReducibilityConfiguration:
    # H = {v0, v1} inside a K4 missing the u0u1 edge; every vertex of the
    # ambient cubic graph needs an incident 1-label among its shown edges.
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    e = g.edge_index
    return ReducibilityConfiguration(
        name="K4minus",
        graph=g,
        h_vertices=(0, 1),
        boundary=(2, 3),
        fixed_labels=(),
        required_one_groups=(
            (e(0, 1), e(0, 2), e(0, 3)),
            (e(0, 1), e(1, 2), e(1, 3)),
        ),
        rules=(
            BoundaryRule(4, EXCLUDE_IF_ALL_ZERO, (e(0, 2), e(1, 2)), designated_nonzero=True),
            BoundaryRule(4, EXCLUDE_IF_ALL_ZERO, (e(0, 3), e(1, 3)), designated_nonzero=True),
        ),
    )


def _cfg_triangle() -> ReducibilityConfiguration:
    # Triangle v0v1v2 with one pendant boundary vertex per corner; u1, u2
    # are pinned to their current values, u0 may move.
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    e = g.edge_index
    return ReducibilityConfiguration(
        name="triangle",
        graph=g,
        h_vertices=(0, 1, 2),
        boundary=(3, 4, 5),
        fixed_labels=(),
        required_one_groups=(
            (e(0, 1), e(0, 2), e(0, 3)),
            (e(0, 1), e(1, 2), e(1, 4)),
            (e(0, 2), e(1, 2), e(2, 5)),
        ),
        rules=(
            BoundaryRule(2, EXCLUDE_IF_ALL_ZERO, (e(0, 3),), designated_nonzero=True),
            BoundaryRule(1, EXCLUDE_ALWAYS, designated_nonzero=True),
            BoundaryRule(1, EXCLUDE_ALWAYS, designated_nonzero=True),
        ),
        linking="equalize-to-first",
    )


def _cfg_p3() -> ReducibilityConfiguration:
    # Center w of a 1-labeled path, with its remaining neighbors; the far
    # path edge forces u0 away from the zero vector.
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    e = g.edge_index
    return ReducibilityConfiguration(
        name="P3",
        graph=g,
        h_vertices=(0,),
        boundary=(1, 2, 3),
        fixed_labels=((e(0, 1), 1),),
        rules=(
            BoundaryRule(2, EXCLUDE_ALWAYS),
            BoundaryRule(2, EXCLUDE_IF_ALL_ZERO, (e(0, 2),)),
            BoundaryRule(2, EXCLUDE_IF_ALL_ZERO, (e(0, 3),)),
        ),
    )


def _cfg_k23() -> ReducibilityConfiguration:
    # Complete bipartite {v0, v1} x {u0, u1, u2}; exactly the two marked
    # edges are 1-labeled, which pins the zero-vector membership pattern.
    g = Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    e = g.edge_index
    return ReducibilityConfiguration(
        name="K23",
        graph=g,
        h_vertices=(0, 1),
        boundary=(2, 3, 4),
        fixed_labels=(
            (e(0, 2), 1),
            (e(0, 3), 0),
            (e(0, 4), 0),
            (e(1, 2), 0),
            (e(1, 3), 0),
            (e(1, 4), 1),
        ),
        rules=(
            BoundaryRule(4, include_zero=True),
            BoundaryRule(4, EXCLUDE_ALWAYS),
            BoundaryRule(4, include_zero=True),
        ),
    )


def _c4_graph() -> Graph:
    # 4-cycle v0-v1-v3-v2-v0 with one pendant per cycle vertex.
    return Graph(8, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 4), (1, 5), (2, 6), (3, 7)])


def _cfg_c4_a() -> ReducibilityConfiguration:
    g = _c4_graph()
    e = g.edge_index
    return ReducibilityConfiguration(
        name="C4_a",
        graph=g,
        h_vertices=(0, 1, 2, 3),
        boundary=(4, 5, 6, 7),
        fixed_labels=((e(0, 1), 1), (e(0, 2), 0), (e(1, 3), 0), (e(2, 3), 0)),
        required_one_groups=(
            (e(0, 1), e(0, 2), e(0, 4)),
            (e(0, 1), e(1, 3), e(1, 5)),
            (e(0, 2), e(2, 3), e(2, 6)),
            (e(1, 3), e(2, 3), e(3, 7)),
        ),
        rules=tuple(
            BoundaryRule(1, EXCLUDE_ALWAYS, designated_nonzero=True) for _ in range(4)
        ),
    )


def _cfg_c4_b() -> ReducibilityConfiguration:
    g = _c4_graph()
    e = g.edge_index
    return ReducibilityConfiguration(
        name="C4_b",
        graph=g,
        h_vertices=(0, 1, 2, 3),
        boundary=(4, 5, 6, 7),
        fixed_labels=(
            (e(0, 1), 1),
            (e(0, 2), 0),
            (e(1, 3), 0),
            (e(2, 3), 1),
            (e(0, 4), 0),
            (e(1, 5), 0),
            (e(2, 6), 0),
            (e(3, 7), 0),
        ),
        rules=tuple(
            BoundaryRule(1, EXCLUDE_ALWAYS, designated_nonzero=True) for _ in range(4)
        ),
        linking="no-double-pair",
        choice_stage=True,
    )


def _cfg_bridge() -> ReducibilityConfiguration:
    # A 1-labeled edge v0v1 in a cubic triangle-free, 1-labeled-C4-free
    # graph; all four outer neighbors are distinct and nonadjacent.
    g = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    e = g.edge_index
    return ReducibilityConfiguration(
        name="bridge",
        graph=g,
        h_vertices=(0, 1),
        boundary=(2, 3, 4, 5),
        fixed_labels=((e(0, 1), 1),),
        rules=tuple(BoundaryRule(2, EXCLUDE_ALWAYS) for _ in range(4)),
    )


def builtin_configs() -> Dict[str, ReducibilityConfiguration]:
    configs = [
        _cfg_k4minus(),
        _cfg_triangle(),
        _cfg_p3(),
        _cfg_k23(),
        _cfg_c4_a(),
        _cfg_c4_b(),
        _cfg_bridge(),
    ]
    return {c.name: c for c in configs}


# -- mutations ----------------------------------------------------------------


@dataclass(frozen=True)
class Mutation:
    """A named weakening of one builtin configuration, used as a control:
    dropping the constraint must surface a counterexample."""

    name: str
    config: str
    description: str


def _mutate_rules(cfg: ReducibilityConfiguration, **changes) -> ReducibilityConfiguration:
    return replace(cfg, rules=tuple(replace(r, **changes) for r in cfg.rules))


def apply_mutation(cfg: ReducibilityConfiguration, mutation_name: str) -> ReducibilityConfiguration:
    mutations = builtin_mutations()
    if mutation_name not in mutations:
        raise ValueError(f"unknown mutation {mutation_name!r}")
    mut = mutations[mutation_name]
    if mut.config != cfg.name:
        raise ValueError(f"mutation {mutation_name!r} targets {mut.config}, not {cfg.name}")
    cfg = replace(cfg, name=f"{cfg.name}[{mutation_name}]")
    if mutation_name == "k4minus-drop-min-size":
        return _mutate_rules(cfg, min_size=1)
    if mutation_name == "triangle-drop-linking":
        return replace(cfg, linking=None)
    if mutation_name == "p3-drop-min-size":
        return _mutate_rules(cfg, min_size=1)
    if mutation_name == "k23-drop-min-size":
        return _mutate_rules(cfg, min_size=1)
    if mutation_name == "c4a-allow-zero":
        return _mutate_rules(cfg, exclude_zero=EXCLUDE_NEVER, designated_nonzero=False)
    if mutation_name == "c4b-shrink-choice":
        return replace(cfg, choice_multi_min=1)
    if mutation_name == "bridge-allow-zero-singletons":
        return _mutate_rules(cfg, min_size=1, exclude_zero=EXCLUDE_NEVER)
    raise AssertionError(f"unhandled mutation {mutation_name!r}")


def builtin_mutations() -> Dict[str, Mutation]:
    muts = [
        Mutation("k4minus-drop-min-size", "K4minus", "candidate sets may be singletons"),
        Mutation("triangle-drop-linking", "triangle", "drop the equal-values linking rule"),
        Mutation("p3-drop-min-size", "P3", "candidate sets may be singletons"),
        Mutation("k23-drop-min-size", "K23", "candidate sets may be singletons"),
        Mutation("c4a-allow-zero", "C4_a", "allow the zero vector as a current value"),
        Mutation("c4b-shrink-choice", "C4_b", "choice-stage sets may be singletons"),
        Mutation(
            "bridge-allow-zero-singletons",
            "bridge",
            "allow zero vectors and singleton candidate sets",
        ),
    ]
    return {m.name: m for m in muts}


# -- suite --------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteReport:
    rows: Tuple[CheckReport, ...]

    @property
    def passed(self) -> bool:
        return all(r.reducible for r in self.rows)


def run_suite(
    names: Optional[Sequence[str]] = None,
    mutation: Optional[str] = None,
    jobs: int = 1,
) -> SuiteReport:
    configs = builtin_configs()
    if names is None:
        names = list(configs)
    rows = []
    for name in names:
        if name not in configs:
            raise ValueError(f"unknown configuration {name!r}")
        cfg = configs[name]
        if mutation is not None:
            cfg = apply_mutation(cfg, mutation)
        rows.append(check_reducible(cfg, jobs=jobs))
    return SuiteReport(tuple(rows))


__all__ = [
    "DIM",
    "ALL_VECTORS",
    "NONZERO_VECTORS",
    "BoundaryRule",
    "ReducibilityConfiguration",
    "BoundaryFamily",
    "Counterexample",
    "CheckReport",
    "SuiteReport",
    "Mutation",
    "enumerate_families",
    "check_family",
    "check_reducible",
    "builtin_configs",
    "builtin_mutations",
    "apply_mutation",
    "run_suite",
]
