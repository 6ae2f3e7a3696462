"""Vertex/edge connectivity with certificates, Menger path systems and atoms.

Exact values come from unit-capacity max-flow on the standard split
digraph.  Vertex connectivity uses the classic reduction: fix a vertex v
of minimum degree, take flows from v to every non-neighbor and between
every non-adjacent pair of neighbors of v, and minimize.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .containers import Container, container_from_paths
from .errors import GuardExceeded
from .graphs import Graph
from .guards import guard_value
from .metrics import bfs_distances, degree_stats, is_connected


class _FlowNet:
    """Arc-list max-flow network with unit augmentations (Edmonds-Karp)."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def arc(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def maxflow(self, s: int, t: int, limit: int | None = None) -> int:
        value = 0
        to, cap, head = self.to, self.cap, self.head
        while limit is None or value < limit:
            pred = [-1] * self.n
            pred[s] = -2
            queue = deque([s])
            found = False
            while queue and not found:
                u = queue.popleft()
                for ai in head[u]:
                    if cap[ai] > 0:
                        v = to[ai]
                        if pred[v] == -1:
                            pred[v] = ai
                            if v == t:
                                found = True
                                break
                            queue.append(v)
            if not found:
                break
            bottleneck = None
            v = t
            path = []
            while v != s:
                ai = pred[v]
                path.append(ai)
                c = cap[ai]
                bottleneck = c if bottleneck is None else min(bottleneck, c)
                v = to[ai ^ 1]
            for ai in path:
                cap[ai] -= bottleneck
                cap[ai ^ 1] += bottleneck
            value += bottleneck
        return value

    def residual_reachable(self, s: int) -> list[bool]:
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for ai in self.head[u]:
                if self.cap[ai] > 0 and not seen[self.to[ai]]:
                    seen[self.to[ai]] = True
                    queue.append(self.to[ai])
        return seen


# node numbering on the split digraph: in(v) = 2v, out(v) = 2v + 1;
# the source is used via its out-node and the sink via its in-node.

def _split_net(g: Graph, s: int, t: int, edge_cap: int) -> _FlowNet:
    net = _FlowNet(2 * g.n)
    for v in range(g.n):
        if v != s and v != t:
            net.arc(2 * v, 2 * v + 1, 1)
    for u in range(g.n):
        for v in g.adj[u]:
            net.arc(2 * u + 1, 2 * v, edge_cap)
    return net


def local_vertex_cut(g: Graph, s: int, t: int, limit: int | None = None):
    """Size of a minimum s-t vertex separator (s, t non-adjacent) + one separator.

    Returns (value, separator); the separator is None when the limit was hit.
    """
    if g.has_edge(s, t):
        raise ValueError("local vertex cut requires a non-adjacent pair")
    net = _split_net(g, s, t, edge_cap=g.n)
    value = net.maxflow(2 * s + 1, 2 * t, limit)
    if limit is not None and value >= limit:
        return value, None
    reach = net.residual_reachable(2 * s + 1)
    separator = tuple(
        v for v in range(g.n)
        if v != s and v != t and reach[2 * v] and not reach[2 * v + 1]
    )
    return value, separator


def vertex_connectivity(g: Graph):
    """Exact kappa with a certificate.

    Returns (kappa, certificate): a minimum separator tuple, the marker
    string "complete", or an empty tuple for disconnected input.
    """
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if not is_connected(g):
        return 0, ()
    if all(len(nbrs) == n - 1 for nbrs in g.adj):
        return n - 1, "complete"
    delta, _, _ = degree_stats(g)
    pivot = min(range(n), key=g.degree)
    best = delta
    best_sep = tuple(g.adj[pivot])
    for u in range(n):
        if u != pivot and not g.has_edge(pivot, u):
            value, sep = local_vertex_cut(g, pivot, u, limit=best)
            if sep is not None and value < best:
                best, best_sep = value, sep
    nbrs = g.adj[pivot]
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                value, sep = local_vertex_cut(g, x, y, limit=best)
                if sep is not None and value < best:
                    best, best_sep = value, sep
    return best, best_sep


def edge_connectivity(g: Graph):
    """Exact lambda with a minimum disconnecting edge set of the form E(S, S-bar)."""
    n = g.n
    if n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        return 0, ()
    delta, _, _ = degree_stats(g)
    pivot = min(range(n), key=g.degree)
    best = delta
    best_cut = tuple((pivot, v) if pivot < v else (v, pivot) for v in g.adj[pivot])
    for u in range(n):
        if u == pivot:
            continue
        net = _FlowNet(n)
        for a in range(n):
            for b in g.adj[a]:
                if a < b:
                    net.arc(a, b, 1)
                    net.arc(b, a, 1)
        value = net.maxflow(pivot, u, limit=best)
        if value < best:
            reach = net.residual_reachable(pivot)
            best = value
            best_cut = tuple(
                sorted(
                    (min(a, b), max(a, b))
                    for a in range(n)
                    if reach[a]
                    for b in g.adj[a]
                    if not reach[b]
                )
            )
    return best, best_cut


def max_independent_paths(g: Graph, s: int, t: int) -> Container:
    """A maximum set of internally vertex-disjoint s-t paths, from a max flow."""
    if s == t:
        raise ValueError("endpoints must differ")
    net = _split_net(g, s, t, edge_cap=1)
    source, sink = 2 * s + 1, 2 * t
    value = net.maxflow(source, sink)
    paths = _decompose_paths(net, source, sink, value)
    name_paths = [tuple(g.name_of(v) for v in p) for p in paths]
    return container_from_paths(g.name_of(s), g.name_of(t), name_paths)


def _decompose_paths(net: _FlowNet, source: int, sink: int, value: int):
    """Split the integral flow into vertex paths, stripping residual cycles.

    Walks always take the lowest-index saturated unused arc, which makes
    the output deterministic.
    """
    used = [False] * len(net.to)

    def next_arc(u: int):
        for ai in net.head[u]:
            if ai % 2 == 0 and not used[ai] and net.cap[ai] == 0:
                return ai
        return None

    paths = []
    for _ in range(value):
        walk_nodes = [source]
        walk_arcs = []
        pos = {source: 0}
        u = source
        while u != sink:
            ai = next_arc(u)
            assert ai is not None, "flow conservation violated"
            v = net.to[ai]
            if v in pos:
                # erase the cycle from the flow and retry from v
                k = pos[v]
                for cycle_arc in walk_arcs[k:]:
                    net.cap[cycle_arc] = 1  # cancel this unit of flow
                for node in walk_nodes[k + 1:]:
                    del pos[node]
                del walk_nodes[k + 1:]
                del walk_arcs[k:]
                used[ai] = True
                net.cap[ai] = 1
                u = v
                continue
            used[ai] = True
            walk_arcs.append(ai)
            walk_nodes.append(v)
            pos[v] = len(walk_nodes) - 1
            u = v
        vertices = []
        for node in walk_nodes:
            v = node // 2
            if not vertices or vertices[-1] != v:
                vertices.append(v)
        paths.append(tuple(vertices))
    return paths


# ---------------------------------------------------------------------------
# Atoms

@dataclass(frozen=True)
class Atom:
    vertices: tuple[int, ...]
    separator: tuple[int, ...]


def atoms(g: Graph, max_vertices: int | None = None, max_kappa: int | None = None):
    """All atomic parts with their corresponding minimum separating sets.

    Enumerates every kappa-subset whose removal disconnects the graph;
    intentionally exponential, guarded, and meant for validating theory
    at desk scale.
    """
    n_guard = guard_value("atoms_vertices", max_vertices)
    k_guard = guard_value("atoms_kappa", max_kappa)
    if g.n > n_guard:
        raise GuardExceeded(f"atoms(): {g.n} vertices exceeds guard {n_guard}")
    if not is_connected(g):
        raise ValueError("atoms() requires a connected graph")
    if all(len(nbrs) == g.n - 1 for nbrs in g.adj):
        raise ValueError("atoms() is undefined for complete graphs")
    kappa, _ = vertex_connectivity(g)
    if kappa > k_guard:
        raise GuardExceeded(f"atoms(): kappa={kappa} exceeds guard {k_guard}")
    parts: dict[tuple[int, ...], None] = {}
    for removed in itertools.combinations(range(g.n), kappa):
        comps = _components_without(g, set(removed))
        if len(comps) < 2:
            continue
        for comp in comps:
            parts.setdefault(tuple(sorted(comp)), None)
    assert parts, "a minimum separating set must exist for a non-complete graph"
    smallest = min(len(p) for p in parts)
    out = []
    for part in sorted(p for p in parts if len(p) == smallest):
        in_part = set(part)
        boundary = sorted(
            {w for v in part for w in g.adj[v] if w not in in_part}
        )
        out.append(Atom(part, tuple(boundary)))
    return out


def _components_without(g: Graph, removed: set[int]):
    seen = set(removed)
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    queue.append(v)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# Report

@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    lam: int
    delta: int
    min_vertex_separator: tuple[int, ...] | None
    min_edge_cut: tuple[tuple[int, int], ...]
    optimal_fault_tolerance: bool
    fault_tolerance: int
    is_hypo_connected: bool
    watkins_lower_bound_ok: bool | None


def connectivity_report(g: Graph, vertex_transitive: bool | None = None) -> ConnectivityReport:
    kappa, cert = vertex_connectivity(g)
    lam, cut = edge_connectivity(g)
    delta, _, _ = degree_stats(g)
    if vertex_transitive is None:
        vertex_transitive = bool((g.family_meta or {}).get("vertex_transitive"))
    watkins = None
    if vertex_transitive:
        watkins = 3 * kappa >= 2 * (delta + 1)
    return ConnectivityReport(
        kappa=kappa,
        lam=lam,
        delta=delta,
        min_vertex_separator=None if cert == "complete" else cert,
        min_edge_cut=cut,
        optimal_fault_tolerance=kappa == delta,
        fault_tolerance=kappa - 1,
        is_hypo_connected=kappa < delta,
        watkins_lower_bound_ok=watkins,
    )
