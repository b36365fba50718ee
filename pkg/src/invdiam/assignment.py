"""Vector assignments: solving f(u).f(v) = label(uv) over F2^t.

The minimum dimension admitting an assignment for the XOR label of two
orientations equals their inversion distance, so this solver doubles as
the exact distance/diameter engine for graphs too large for plain BFS.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import gf2
from .errors import BudgetExceededError
from .gf2 import Gf2Vector
from .graph import Graph, Label

DIAMETER_LABEL_BUDGET = 24
_DEADLINE_CHECK_INTERVAL = 2048


@dataclass(frozen=True)
class Assignment:
    """One vector of dimension t per vertex."""

    graph: Graph
    t: int
    vectors: Tuple[Gf2Vector, ...]

    def __post_init__(self) -> None:
        if len(self.vectors) != self.graph.n:
            raise ValueError(
                f"expected {self.graph.n} vectors, got {len(self.vectors)}"
            )
        for v in self.vectors:
            if v.dim != self.t:
                raise ValueError(f"vector dim {v.dim} != t={self.t}")

    def bits(self) -> List[int]:
        return [v.bits for v in self.vectors]

    def to_strings(self) -> List[str]:
        return [v.to_string() for v in self.vectors]

    @classmethod
    def from_bits(cls, graph: Graph, t: int, bits: Sequence[int]) -> "Assignment":
        return cls(graph, t, tuple(Gf2Vector(t, b) for b in bits))

    @classmethod
    def from_strings(cls, graph: Graph, strings: Sequence[str]) -> "Assignment":
        vecs = tuple(Gf2Vector.from_string(s) for s in strings)
        t = vecs[0].dim if vecs else 0
        return cls(graph, t, vecs)


def verify(graph: Graph, label: Label, assignment: Assignment) -> bool:
    """True iff f(u).f(v) = label(uv) on every edge."""
    if assignment.graph != graph:
        raise ValueError("assignment belongs to a different graph")
    if label.graph != graph:
        raise ValueError("label belongs to a different graph")
    bits = assignment.bits()
    for e, (u, v) in enumerate(graph.edges):
        if gf2.dot_bits(bits[u], bits[v]) != label.bit(e):
            return False
    return True


class _Timeout(Exception):
    pass


class _SolveContext:
    """Per-graph search preparation, reusable across labels and dimensions.

    Vertices are ordered by descending adjacency into the already-placed
    prefix (ties by index), so each new vertex meets the largest possible
    linear system and candidates come from its affine solution set.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        n = graph.n
        placed: List[int] = []
        in_prefix = [False] * n
        deg_into = [0] * n
        for _ in range(n):
            best = -1
            for v in range(n):
                if not in_prefix[v] and (best < 0 or deg_into[v] > deg_into[best]):
                    best = v
            placed.append(best)
            in_prefix[best] = True
            for w in graph.adjacency[best]:
                deg_into[w] += 1
        self.order = placed
        pos_of = {v: p for p, v in enumerate(placed)}
        # For each position: (earlier position, edge index) per placed
        # neighbor, and the positions of later neighbors (for forward checks).
        self.back_edges: List[List[Tuple[int, int]]] = []
        self.forward_positions: List[List[int]] = []
        for p, v in enumerate(placed):
            links = []
            ahead = []
            for w in graph.adjacency[v]:
                q = pos_of[w]
                if q < p:
                    links.append((q, graph.edge_index(v, w)))
                else:
                    ahead.append(q)
            self.back_edges.append(links)
            self.forward_positions.append(sorted(ahead))

    def search(
        self,
        label_bits: int,
        t: int,
        deadline: Optional[float] = None,
        prefer: Optional[Sequence[int]] = None,
    ) -> Iterator[List[int]]:
        """Yield every valid assignment (words indexed by vertex), in order.

        Backtracking is complete: the candidate list at each vertex is
        exactly the affine solution set of its constraints against the
        assigned prefix, ascending (a preferred word, if given and legal,
        is tried first).  After each placement the partial systems of all
        unplaced neighbors are re-solved, so a contradiction prunes the
        branch as soon as it is determined, not when the vertex is reached.
        """
        n = self.graph.n
        if n == 0:
            if label_bits == 0:
                yield []
            return
        order = self.order
        back = self.back_edges
        forward = self.forward_positions
        solve_bits = gf2.solve_bits
        vecs = [0] * n
        stack: List[List[int]] = []
        nodes = 0

        def system(p: int, depth: int):
            rows = []
            rhs = []
            for q, e in back[p]:
                if q < depth:
                    rows.append(vecs[order[q]])
                    rhs.append((label_bits >> e) & 1)
            return solve_bits(rows, rhs, t)

        def candidates(p: int) -> Optional[List[int]]:
            sol = system(p, p)
            if sol is None:
                return None
            particular, basis = sol
            cands = gf2.affine_solutions_bits(particular, basis)
            if prefer is not None:
                want = prefer[order[p]]
                if want in cands:
                    cands.remove(want)
                    cands.insert(0, want)
            # Reversed so list.pop() consumes them in ascending order.
            cands.reverse()
            return cands

        first = candidates(0)
        if first is None:
            return
        stack.append(first)
        while stack:
            nodes += 1
            if deadline is not None and nodes % _DEADLINE_CHECK_INTERVAL == 0:
                if time.monotonic() > deadline:
                    raise _Timeout()
            top = stack[-1]
            if not top:
                stack.pop()
                continue
            p = len(stack) - 1
            vecs[order[p]] = top.pop()
            if p + 1 == n:
                yield list(vecs)
                continue
            if any(system(q, p + 1) is None for q in forward[p] if q > p + 1):
                continue
            nxt = candidates(p + 1)
            if nxt is not None:
                stack.append(nxt)


_context_cache: Dict[Graph, _SolveContext] = {}


def _context(graph: Graph) -> _SolveContext:
    ctx = _context_cache.get(graph)
    if ctx is None:
        ctx = _SolveContext(graph)
        if len(_context_cache) > 256:
            _context_cache.clear()
        _context_cache[graph] = ctx
    return ctx


def _check_label(graph: Graph, label: Label) -> None:
    if label.graph != graph:
        raise ValueError("label belongs to a different graph")


def _check_t(t: int) -> None:
    if not 0 <= t <= gf2.MAX_DIM:
        raise ValueError(f"t must be in 0..{gf2.MAX_DIM}, got {t}")


def solve(
    graph: Graph,
    label: Label,
    t: int,
    prefer: Optional[Sequence[int]] = None,
) -> Optional[Assignment]:
    """Find a valid t-dimensional assignment, or None if none exists."""
    _check_label(graph, label)
    _check_t(t)
    found = next(_context(graph).search(label.bits, t, prefer=prefer), None)
    if found is None:
        return None
    return Assignment.from_bits(graph, t, found)


def solve_with_deadline(
    graph: Graph, label: Label, t: int, deadline: float
) -> Tuple[str, Optional[Assignment]]:
    """Like solve, but stops at a monotonic-clock deadline.

    Returns ("sat", assignment), ("unsat", None) or ("timeout", None).
    """
    _check_label(graph, label)
    _check_t(t)
    try:
        found = next(_context(graph).search(label.bits, t, deadline=deadline), None)
    except _Timeout:
        return "timeout", None
    if found is None:
        return "unsat", None
    return "sat", Assignment.from_bits(graph, t, found)


def enumerate_assignments(
    graph: Graph, label: Label, t: int, cap: int
) -> Iterator[Assignment]:
    """Yield distinct valid assignments in deterministic order, up to cap."""
    _check_label(graph, label)
    _check_t(t)
    count = 0
    for words in _context(graph).search(label.bits, t):
        if count >= cap:
            return
        count += 1
        yield Assignment.from_bits(graph, t, words)


def min_dim(
    graph: Graph,
    label: Label,
    t_max: int,
    prefer: Optional[Sequence[int]] = None,
) -> Optional[int]:
    """Least t in 0..t_max admitting an assignment; None if all fail."""
    _check_label(graph, label)
    _check_t(t_max)
    if label.bits == 0:
        return 0
    ctx = _context(graph)
    for t in range(1, t_max + 1):
        if next(ctx.search(label.bits, t, prefer=prefer), None) is not None:
            return t
    return None


@dataclass(frozen=True)
class DiameterResult:
    diameter: int
    hardest_label: Label
    witness: Assignment


def diameter_via_assignment(graph: Graph, t_max: int = gf2.MAX_DIM) -> DiameterResult:
    """Max over all labels of min_dim, with a witnessing hardest label.

    Labels are visited in Gray-code order and each search prefers the
    previous witness's vectors, since adjacent labels tend to admit
    nearby witnesses.  Ties go to the numerically least label word.
    """
    if graph.m > DIAMETER_LABEL_BUDGET:
        raise BudgetExceededError(
            f"diameter_via_assignment needs |E| <= {DIAMETER_LABEL_BUDGET}, got {graph.m}"
        )
    _check_t(t_max)
    ctx = _context(graph)
    best = -1
    best_label_bits = 0
    best_witness: Optional[List[int]] = None
    prev_witness: Optional[List[int]] = None
    for i in range(1 << graph.m):
        bits = i ^ (i >> 1)
        found_t: Optional[int] = None
        witness: Optional[List[int]] = None
        if bits == 0:
            found_t, witness = 0, [0] * graph.n
        else:
            for t in range(1, t_max + 1):
                witness = next(ctx.search(bits, t, prefer=prev_witness), None)
                if witness is not None:
                    found_t = t
                    break
        if found_t is None:
            raise BudgetExceededError(
                f"label {bits:0{graph.m}b} exceeds t_max={t_max}"
            )
        prev_witness = witness
        if found_t > best or (found_t == best and bits < best_label_bits):
            best = found_t
            best_label_bits = bits
            best_witness = witness
    assert best_witness is not None
    label = Label(graph, best_label_bits)
    return DiameterResult(best, label, Assignment.from_bits(graph, best, best_witness))


@dataclass(frozen=True)
class HardestResult:
    """Best label found; dim is None when it defeats every t <= t_max."""

    label: Label
    dim: Optional[int]
    exhaustive: bool
    evaluations: int


def _score(dim: Optional[int]) -> int:
    return 10**9 if dim is None else dim


def hardest_label(
    graph: Graph, t_max: int, budget: int, seed: int = 0
) -> HardestResult:
    """Search label space for a label maximizing min_dim.

    Exhaustive when 2^|E| fits the budget, otherwise seeded hill-climbing
    over single-bit flips with sideways moves and restarts.  Deterministic
    for a fixed seed; ties prefer the numerically least label word.
    """
    _check_t(t_max)
    m = graph.m
    budget = max(budget, 1)
    if m == 0:
        return HardestResult(Label(graph, 0), 0, True, 1)

    evaluated: Dict[int, Optional[int]] = {}

    def evaluate(bits: int) -> Optional[int]:
        if bits not in evaluated:
            evaluated[bits] = min_dim(graph, Label(graph, bits), t_max)
        return evaluated[bits]

    if (1 << m) <= budget:
        best_bits, best_dim = 0, evaluate(0)
        for bits in range(1, 1 << m):
            d = evaluate(bits)
            if _score(d) > _score(best_dim):
                best_bits, best_dim = bits, d
        return HardestResult(Label(graph, best_bits), best_dim, True, len(evaluated))

    rng = random.Random(seed)
    best_bits = 0
    best_dim: Optional[int] = 0

    def consider(bits: int, d: Optional[int]) -> None:
        nonlocal best_bits, best_dim
        if _score(d) > _score(best_dim) or (
            _score(d) == _score(best_dim) and bits < best_bits
        ):
            best_bits, best_dim = bits, d

    current = rng.getrandbits(m)
    current_dim = evaluate(current)
    consider(current, current_dim)
    stall = 0
    attempts = 0
    while len(evaluated) < budget and attempts < 64 * budget:
        attempts += 1
        neighbor = current ^ (1 << rng.randrange(m))
        d = evaluate(neighbor)
        consider(neighbor, d)
        if _score(d) >= _score(current_dim):
            improved = _score(d) > _score(current_dim)
            current, current_dim = neighbor, d
            if improved:
                stall = 0
                continue
        stall += 1
        if stall > 3 * m:
            current = rng.getrandbits(m)
            current_dim = evaluate(current)
            consider(current, current_dim)
            stall = 0
    return HardestResult(Label(graph, best_bits), best_dim, False, len(evaluated))


def assignment_to_inversions(assignment: Assignment) -> List[List[int]]:
    """Decompose an assignment into inversion sets, one per coordinate.

    Inverting X_i = {v : coordinate i of f(v) is 1} for i = 0..t-1 flips
    each edge uv exactly f(u).f(v) times mod 2, i.e. realizes the label
    the assignment certifies.
    """
    return [
        [v for v in range(assignment.graph.n) if assignment.vectors[v].coordinate(i)]
        for i in range(assignment.t)
    ]


__all__ = [
    "DIAMETER_LABEL_BUDGET",
    "Assignment",
    "DiameterResult",
    "HardestResult",
    "verify",
    "solve",
    "solve_with_deadline",
    "enumerate_assignments",
    "min_dim",
    "diameter_via_assignment",
    "hardest_label",
    "assignment_to_inversions",
]
