"""Transposition sets, their graphs T(S), and predicted Cayley properties."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, from_transpositions
from .metrics import girth, is_connected
from .symmetry import automorphism_group, edge_orbits


@dataclass(frozen=True)
class TranspositionSet:
    """Set of transpositions of {1..n}, stored as sorted (i, j) pairs with i < j."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j in self.pairs:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"pair ({i},{j}) out of range 1..{self.n}")
            if (i, j) in seen:
                raise ValueError(f"duplicate pair ({i},{j})")
            seen.add((i, j))
        if list(self.pairs) != sorted(self.pairs):
            object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))


def parse_transposition_file(text: str) -> TranspositionSet:
    """First line n, then one "i j" pair per line; '#' starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty transposition file")
    n = int(lines[0])
    pairs = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'i j', got {line!r}")
        i, j = int(parts[0]), int(parts[1])
        pairs.append((min(i, j), max(i, j)))
    return TranspositionSet(n, tuple(sorted(pairs)))


def format_transposition_file(ts: TranspositionSet) -> str:
    return "\n".join([str(ts.n)] + [f"{i} {j}" for i, j in ts.pairs]) + "\n"


def transposition_graph(ts: TranspositionSet) -> Graph:
    """T(S): the graph on {1..n} with an edge per transposition (0-indexed)."""
    edges = [(i - 1, j - 1) for i, j in ts.pairs]
    labels = [str(i) for i in range(1, ts.n + 1)]
    return Graph.from_edges(
        ts.n, edges, vertex_labels=labels,
        family_meta={"family": "transposition_graph", "n": ts.n},
    )


def cayley_of(ts: TranspositionSet, guard: int | None = None) -> Graph:
    return from_transpositions(ts.n, ts.pairs, guard=guard)


@dataclass(frozen=True)
class ClassificationReport:
    generates_sn: bool
    minimal: bool
    family: str
    aut_t_order: int | None
    predicted_edge_transitive: bool
    predicted_aut_order: int | None


def classify(ts: TranspositionSet) -> ClassificationReport:
    """Structural report on T(S) and the Cayley properties it predicts.

    Generation corresponds to connectivity of T(S) and minimality to
    T(S) being a tree; edge-transitivity transfers between T(S) and the
    Cayley graph.  The automorphism-order prediction n! * |Aut(T(S))| is
    emitted only for trees and for girth >= 5, the proven normal cases.
    """
    t = transposition_graph(ts)
    connected = is_connected(t) and ts.n >= 1
    tree = connected and len(ts.pairs) == ts.n - 1
    aut = automorphism_group(t)
    e_orbits = edge_orbits(aut, t)
    edge_transitive = bool(ts.pairs) and len(e_orbits) == 1
    predicted_order = None
    if connected and (tree or girth(t) >= 5):
        predicted_order = math.factorial(ts.n) * aut.order
    return ClassificationReport(
        generates_sn=connected,
        minimal=tree,
        family=_shape_name(t, ts),
        aut_t_order=aut.order,
        predicted_edge_transitive=edge_transitive,
        predicted_aut_order=predicted_order,
    )


def _shape_name(t: Graph, ts: TranspositionSet) -> str:
    n, m = ts.n, len(ts.pairs)
    degs = sorted(t.degree(v) for v in range(n))
    if m == n * (n - 1) // 2:
        return "complete_transposition"
    if m == n - 1 and degs == [1] * (n - 1) + [n - 1]:
        return "star"
    if m == n - 1 and is_connected(t) and degs == [1, 1] + [2] * (n - 2):
        return "bubble_sort"
    if m == n and degs == [2] * n and is_connected(t):
        return "modified_bubble_sort"
    bipartition = _complete_bipartite_classes(t)
    if bipartition is not None:
        return "generalized_star"
    return "general"


def _complete_bipartite_classes(t: Graph):
    from .metrics import is_bipartite

    if t.edge_count() == 0:
        return None
    res = is_bipartite(t)
    if not res.bipartite:
        return None
    left = [v for v in range(t.n) if res.coloring[v] == 0]
    right = [v for v in range(t.n) if res.coloring[v] == 1]
    if all(t.has_edge(a, b) for a in left for b in right):
        return left, right
    return None
