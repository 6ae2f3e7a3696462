"""Distance-based graph measures: layers, diameter, girth, degrees, Moore bound."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graphs import Graph

INFINITE = float("inf")


@dataclass(frozen=True)
class DistancePartition:
    source: int
    layers: tuple[tuple[int, ...], ...]
    unreachable: tuple[int, ...]


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from source; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    return dist


def distance_layers(g: Graph, v: int) -> DistancePartition:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    dist = bfs_distances(g, v)
    depth = max(dist)
    layers = [[] for _ in range(depth + 1)]
    unreachable = []
    for u, d in enumerate(dist):
        if d < 0:
            unreachable.append(u)
        else:
            layers[d].append(u)
    return DistancePartition(
        v, tuple(tuple(layer) for layer in layers), tuple(unreachable)
    )


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return -1 not in bfs_distances(g, 0)


def eccentricity(g: Graph, v: int) -> int:
    dist = bfs_distances(g, v)
    if -1 in dist:
        raise ValueError("graph is disconnected")
    return max(dist)


def diameter(g: Graph, transitive: bool | None = None) -> int:
    """Exact diameter by BFS; raises on disconnected input.

    On a vertex-transitive graph all eccentricities coincide, so a single
    BFS from vertex 0 already gives the exact diameter.  The shortcut is
    taken when ``transitive`` is true, defaulting to the construction's
    ``family_meta["vertex_transitive"]`` flag.
    """
    if g.n == 0:
        raise ValueError("diameter of the empty graph")
    if transitive is None:
        transitive = bool((g.family_meta or {}).get("vertex_transitive"))
    if transitive:
        return eccentricity(g, 0)
    return max(eccentricity(g, v) for v in range(g.n))


def estimate_diameter(g: Graph, samples: int = 32, seed: int = 0) -> int:
    """Lower bound on the diameter from sampled eccentricities (not exact)."""
    rng = random.Random(seed)
    best = 0
    pool = range(g.n)
    for _ in range(min(samples, g.n)):
        best = max(best, eccentricity(g, rng.choice(pool)))
    return best


def girth(g: Graph):
    """Length of a shortest cycle, or INFINITE for forests.

    BFS from every vertex; a non-tree edge met at depths (d_u, d_w) closes
    a cycle of length d_u + d_w + 1, and the minimum over all roots is
    exact.
    """
    best = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best - 1:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if cycle < best:
                        best = cycle
    return best


def degree_stats(g: Graph) -> tuple[int, int, bool]:
    """(min degree, max degree, is_regular)."""
    if g.n == 0:
        raise ValueError("degree stats of the empty graph")
    degs = [len(nbrs) for nbrs in g.adj]
    lo, hi = min(degs), max(degs)
    return lo, hi, lo == hi


def moore_bound(delta: int, diam: int) -> int:
    """Maximum vertex count of a graph with max degree delta and diameter diam."""
    if delta < 0 or diam < 0:
        raise ValueError("moore bound needs nonnegative arguments")
    if diam == 0:
        return 1
    if delta == 0:
        return 1
    if delta == 1:
        return 2
    if delta == 2:
        return 2 * diam + 1
    return 1 + delta * ((delta - 1) ** diam - 1) // (delta - 2)


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None


def is_bipartite(g: Graph) -> BipartiteResult:
    """BFS 2-coloring; on failure returns an odd-cycle witness."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] < 0:
                    color[w] = color[u] ^ 1
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(False, None, _odd_cycle(parent, u, w))
    return BipartiteResult(True, tuple(color), None)


def _odd_cycle(parent, u, w):
    path_u, path_w = [u], [w]
    while parent[path_u[-1]] >= 0:
        path_u.append(parent[path_u[-1]])
    while parent[path_w[-1]] >= 0:
        path_w.append(parent[path_w[-1]])
    in_u = {v: i for i, v in enumerate(path_u)}
    for j, v in enumerate(path_w):
        if v in in_u:
            return tuple(path_u[: in_u[v] + 1] + path_w[:j][::-1])
    raise AssertionError("BFS trees of one component must meet")


def contains_k4(g: Graph) -> bool:
    """Brute-force K4 detection over common-neighbor triples of each edge."""
    adj_sets = [set(nbrs) for nbrs in g.adj]
    for u in range(g.n):
        for v in g.adj[u]:
            if v <= u:
                continue
            common = sorted(adj_sets[u] & adj_sets[v])
            for i, a in enumerate(common):
                for b in common[i + 1:]:
                    if b in adj_sets[a]:
                        return True
    return False
