"""Immutable labeled graphs, Cayley construction and graph derivations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import groups
from .groups import (
    GeneratingSet,
    GroupElement,
    Perm,
    compose,
    element_key,
    format_element,
    inverse,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with optional vertex/edge labels.

    ``adj`` holds a sorted neighbor tuple per vertex.  Vertex labels,
    when present, are canonical element encodings (or other display
    names) covering every vertex.  Edge labels map ``(u, v)`` with
    ``u < v`` to a generator-pair index.  ``family_meta`` records the
    construction provenance and is carried through serialization.
    """

    adj: tuple[tuple[int, ...], ...]
    vertex_labels: tuple[str, ...] | None = None
    edge_labels: Mapping[tuple[int, int], int] | None = None
    family_meta: dict | None = None

    @property
    def n(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def name_of(self, v: int) -> str:
        return self.vertex_labels[v] if self.vertex_labels else str(v)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        vertex_labels=None,
        edge_labels=None,
        family_meta=None,
    ) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        g = cls(
            adj=tuple(tuple(sorted(s)) for s in nbrs),
            vertex_labels=tuple(vertex_labels) if vertex_labels else None,
            edge_labels=dict(edge_labels) if edge_labels else None,
            family_meta=family_meta,
        )
        validate_graph(g)
        return g


def validate_graph(g: Graph) -> None:
    """Check the structural invariants: simple, symmetric, sorted, covered labels."""
    n = g.n
    for u, nbrs in enumerate(g.adj):
        if list(nbrs) != sorted(set(nbrs)):
            raise ValueError(f"neighbor list of {u} not sorted/deduplicated")
        for v in nbrs:
            if not 0 <= v < n:
                raise ValueError(f"neighbor {v} of {u} out of range")
            if v == u:
                raise ValueError(f"loop at vertex {u}")
            if u not in g.adj[v]:
                raise ValueError(f"asymmetric adjacency: {u}->{v}")
    if g.vertex_labels is not None and len(g.vertex_labels) != n:
        raise ValueError("vertex labels do not cover every vertex")
    if g.edge_labels is not None:
        edge_set = {(u, v) for u in range(n) for v in g.adj[u] if u < v}
        if set(g.edge_labels) != edge_set:
            raise ValueError("edge labels do not cover every edge")


# ---------------------------------------------------------------------------
# Cayley construction

def generator_pairs(gens: tuple[GroupElement, ...]) -> list[int]:
    """Index of the {s, s^-1} pair for each generator, in first-seen order."""
    pair_of = {}
    out = []
    next_id = 0
    for s in gens:
        key = element_key(s)
        if key in pair_of:
            out.append(pair_of[key])
            continue
        pair_of[key] = next_id
        pair_of[element_key(inverse(s))] = next_id
        out.append(next_id)
        next_id += 1
    return out


def cayley_graph(gs: GeneratingSet, guard: int | None = None) -> Graph:
    """Cayley graph on the closure of S, with edges ``{h, sh}``.

    Vertices are numbered in closure (BFS) order and labeled with the
    canonical element encoding; each edge is labeled by the index of its
    generator pair ``{s, s^-1}``.
    """
    keys = {element_key(el) for el in gs.elements}
    if element_key(groups.identity_of(gs.spec)) in keys:
        raise ValueError("generating set contains the identity")
    if any(element_key(inverse(el)) not in keys for el in gs.elements):
        raise ValueError("generating set is not closed under inverses")
    elements = groups.closure(gs, guard=guard)
    index = {element_key(el): i for i, el in enumerate(elements)}
    pair_ids = generator_pairs(gs.elements)
    edges = set()
    edge_labels = {}
    for i, h in enumerate(elements):
        for s, pair in zip(gs.elements, pair_ids):
            j = index[element_key(compose(s, h))]
            e = (i, j) if i < j else (j, i)
            edges.add(e)
            edge_labels[e] = pair
    meta = {
        "family": "cayley",
        "group": groups.spec_to_dict(gs.spec),
        "generators": [format_element(s) for s in gs.elements],
        "vertex_transitive": True,
    }
    return Graph.from_edges(
        len(elements),
        edges,
        vertex_labels=[format_element(el) for el in elements],
        edge_labels=edge_labels,
        family_meta=meta,
    )


def cayley_data(g: Graph) -> tuple[groups.GroupSpec, list[GroupElement], list[GroupElement]]:
    """Recover (spec, vertex elements, generators) from a Cayley-labeled graph."""
    meta = g.family_meta or {}
    if "group" not in meta or g.vertex_labels is None:
        raise ValueError("graph does not carry Cayley group labels")
    spec = groups.spec_from_dict(meta["group"])
    elements = [groups.parse_element(lbl, spec) for lbl in g.vertex_labels]
    gens = [groups.parse_element(t, spec) for t in meta["generators"]]
    return spec, elements, gens


def cayley_digraph_arcs(gs: GeneratingSet, guard: int | None = None):
    """Arcs (h, sh) of the Cayley digraph over the closure of S.

    Display-only companion for asymmetric generator sets; returns
    (labels, arcs) where arcs are (source, target, generator_index).
    """
    if not gs.elements:
        raise ValueError("empty generating set")
    keys = {element_key(el) for el in gs.elements}
    if element_key(groups.identity_of(gs.spec)) in keys:
        raise ValueError("generating set contains the identity")
    elements = groups.closure(gs, guard=guard)
    index = {element_key(el): i for i, el in enumerate(elements)}
    arcs = []
    for i, h in enumerate(elements):
        for k, s in enumerate(gs.elements):
            arcs.append((i, index[element_key(compose(s, h))], k))
    return [format_element(el) for el in elements], arcs


# ---------------------------------------------------------------------------
# Derivations

def cartesian_product(x: Graph, y: Graph) -> Graph:
    """Cartesian product; vertex (u, u') gets index u * |V(Y)| + u'."""
    if x.n == 0 or y.n == 0:
        raise ValueError("cartesian product of an empty graph")
    ny = y.n
    edges = []
    for u in range(x.n):
        base = u * ny
        for a in range(ny):
            for b in y.adj[a]:
                if a < b:
                    edges.append((base + a, base + b))
    for a in range(ny):
        for u in range(x.n):
            for v in x.adj[u]:
                if u < v:
                    edges.append((u * ny + a, v * ny + a))
    return Graph.from_edges(x.n * y.n, edges)


def line_graph(x: Graph) -> Graph:
    """Line graph: vertices are edges of x (sorted), adjacency by incidence."""
    base_edges = x.edges()
    if not base_edges:
        raise ValueError("line graph of an edgeless graph")
    index = {e: i for i, e in enumerate(base_edges)}
    edges = []
    for v in range(x.n):
        incident = [index[(min(v, w), max(v, w))] for w in x.adj[v]]
        for i, a in enumerate(incident):
            for b in incident[i + 1:]:
                edges.append((min(a, b), max(a, b)))
    labels = [f"{x.name_of(u)}-{x.name_of(v)}" for u, v in base_edges]
    return Graph.from_edges(len(base_edges), edges, vertex_labels=labels)


def complement(x: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(x.n)
        for v in range(u + 1, x.n)
        if v not in x.adj[u]
    ]
    return Graph.from_edges(x.n, edges, vertex_labels=x.vertex_labels)


def from_transpositions(n: int, pairs: Iterable[tuple[int, int]], guard: int | None = None) -> Graph:
    """Cayley graph of the group generated by the given transpositions of {1..n}.

    The group may be a proper subgroup of S_n; the graph is connected on
    its closure.
    """
    pairs = list(pairs)
    seen = set()
    gens = []
    for i, j in pairs:
        if not (1 <= i < j <= n):
            raise ValueError(f"transposition ({i},{j}) out of range 1..{n}")
        if (i, j) in seen:
            raise ValueError(f"duplicate transposition ({i},{j})")
        seen.add((i, j))
        image = list(range(n))
        image[i - 1], image[j - 1] = j - 1, i - 1
        gens.append(Perm(tuple(image)))
    spec = groups.PermSubgroup(n, tuple(gens))
    g = cayley_graph(GeneratingSet(spec, tuple(gens)), guard=guard)
    meta = dict(g.family_meta)
    meta["family"] = "transposition_cayley"
    meta["n"] = n
    meta["pairs"] = [list(p) for p in sorted(pairs)]
    return Graph(g.adj, g.vertex_labels, g.edge_labels, meta)
