#!/usr/bin/env python3
"""Generate the committed test fixture corpora.

* corpus_n5/   - every connected graph on at most 5 vertices with at most
  8 edges, one representative per isomorphism class (canonical form =
  minimum edge word over all vertex permutations), all-zero labels.
* outerplanar/ - a deterministic sample of outer-planar graphs on up to
  12 vertices: fans, snake triangulations of polygons, seeded random
  polygon triangulations, and plain cycles, written as one collection
  file per vertex count.

Run from the repository root:  python3 tools/make_fixtures.py
"""

from __future__ import annotations

import random
import sys
from itertools import combinations, permutations
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from invdiam.graph import Graph, Label, serialize_labeled_graph  # noqa: E402


def canonical_edge_word(n: int, edges: frozenset) -> int:
    pair_index = {pair: i for i, pair in enumerate(combinations(range(n), 2))}
    best = None
    for perm in permutations(range(n)):
        word = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            word |= 1 << pair_index[(a, b)]
        if best is None or word < best:
            best = word
    return best


def connected(n: int, edges: frozenset) -> bool:
    if n == 1:
        return True
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def small_corpus(max_n: int = 5, max_m: int = 8):
    """Isomorph-free connected graphs, smallest-first deterministic order."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        reps = {}
        for word in range(1 << len(pairs)):
            edges = frozenset(p for i, p in enumerate(pairs) if (word >> i) & 1)
            if len(edges) > max_m or not connected(n, edges):
                continue
            if n > 1 and any(all(v not in e for e in edges) for v in range(n)):
                continue  # isolated vertex; unreachable given connectivity, cheap guard
            canon = canonical_edge_word(n, edges)
            if canon not in reps:
                reps[canon] = edges
        for canon in sorted(reps):
            out.append((n, sorted(reps[canon])))
    return out


def fan(n: int) -> Graph:
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return Graph(n, edges)


def snake(n: int) -> Graph:
    """Zigzag triangulation of the n-gon."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    lo, hi = 0, n - 1
    while hi - lo > 1:
        edges.append((lo, hi - 1)) if (hi - lo) % 2 else edges.append((lo + 1, hi))
        if (hi - lo) % 2:
            hi -= 1
        else:
            lo += 1
    return Graph(n, set(tuple(sorted(e)) for e in edges))


def random_triangulation(n: int, rng: random.Random) -> Graph:
    """Random triangulation of the n-gon by recursive ear splitting."""
    edges = set((i, (i + 1) % n) for i in range(n))
    edges = set(tuple(sorted(e)) for e in edges)

    def split(poly):
        if len(poly) < 3:
            return
        if len(poly) == 3:
            return
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = poly[i], poly[j]
        edges.add(tuple(sorted((a, b))))
        if i < j:
            split(poly[i : j + 1])
            split(poly[j:] + poly[: i + 1])
        else:
            split(poly[j : i + 1])
            split(poly[i:] + poly[: j + 1])

    split(list(range(n)))
    return Graph(n, edges)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def main() -> None:
    corpus_dir = ROOT / "tests" / "fixtures" / "corpus_n5"
    corpus_dir.mkdir(parents=True, exist_ok=True)
    count = 0
    for n, edges in small_corpus():
        g = Graph(n, edges)
        text = serialize_labeled_graph(g, Label(g, 0))
        name = f"n{n}_m{g.m}_{count:03d}.ilg"
        (corpus_dir / name).write_text(text + "\n", encoding="utf-8")
        count += 1
    print(f"wrote {count} graphs to {corpus_dir}")

    outer_dir = ROOT / "tests" / "fixtures" / "outerplanar"
    outer_dir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20240305)
    written = 0
    for n in range(6, 13):
        graphs = [fan(n), snake(n), cycle(n)]
        for _ in range(3):
            graphs.append(random_triangulation(n, rng))
        seen = set()
        blocks = []
        for g in graphs:
            key = (g.n, g.edges)
            if key in seen:
                continue
            seen.add(key)
            blocks.append(serialize_labeled_graph(g, Label(g, 0)))
            written += 1
        (outer_dir / f"outerplanar_n{n}.ilg").write_text(
            "\n\n".join(blocks) + "\n", encoding="utf-8"
        )
    print(f"wrote {written} outer-planar graphs to {outer_dir}")


if __name__ == "__main__":
    main()
