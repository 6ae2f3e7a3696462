"""Named topology families: hypercubes, stars, tori, circulants and friends."""

from __future__ import annotations

import itertools

from .graphs import Graph, cartesian_product, cayley_graph, from_transpositions
from .groups import (
    BinaryGroup,
    CyclicProduct,
    GeneratingSet,
    Perm,
    ResidueTuple,
    SymmetricGroup,
    Word,
)


def _with_meta(g: Graph, **meta) -> Graph:
    merged = dict(g.family_meta or {})
    merged.update(meta)
    return Graph(g.adj, g.vertex_labels, g.edge_labels, merged)


def _unit_words(n: int) -> list[Word]:
    return [Word(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]


def hypercube(n: int) -> Graph:
    """Q_n: Cayley graph of Z_2^n over the unit vectors; 2^n vertices, n-regular."""
    if n < 1:
        raise ValueError("hypercube requires n >= 1")
    gs = GeneratingSet(BinaryGroup(n), tuple(_unit_words(n)))
    return _with_meta(cayley_graph(gs), family="hypercube", n=n)


def folded_hypercube(n: int) -> Graph:
    """FQ_n: hypercube plus antipodal edges; (n+1)-regular."""
    if n < 2:
        raise ValueError("folded hypercube requires n >= 2")
    gens = _unit_words(n) + [Word((1,) * n)]
    gs = GeneratingSet(BinaryGroup(n), tuple(gens))
    return _with_meta(cayley_graph(gs), family="folded_hypercube", n=n)


def augmented_cube(n: int) -> Graph:
    """AQ_n: unit vectors plus the suffix vectors with 2..n trailing ones."""
    if n < 4:
        raise ValueError("augmented cube requires n >= 4")
    suffixes = [Word(tuple(0 if j < n - k else 1 for j in range(n))) for k in range(2, n + 1)]
    gs = GeneratingSet(BinaryGroup(n), tuple(_unit_words(n) + suffixes))
    return _with_meta(cayley_graph(gs), family="augmented_cube", n=n)


def star_graph(n: int) -> Graph:
    """ST_n: Cayley graph of S_n over {(1i): i = 2..n}; n! vertices, (n-1)-regular."""
    if n < 2:
        raise ValueError("star graph requires n >= 2")
    return _with_meta(
        _transposition_family(n, [(1, i) for i in range(2, n + 1)]),
        family="star", n=n,
    )


def bubble_sort_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("bubble-sort graph requires n >= 2")
    return _with_meta(
        _transposition_family(n, [(i, i + 1) for i in range(1, n)]),
        family="bubble_sort", n=n,
    )


def modified_bubble_sort_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("modified bubble-sort graph requires n >= 3")
    pairs = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return _with_meta(_transposition_family(n, pairs), family="modified_bubble_sort", n=n)


def complete_transposition_graph(n: int) -> Graph:
    if n < 2:
        raise ValueError("complete transposition graph requires n >= 2")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return _with_meta(_transposition_family(n, pairs), family="complete_transposition", n=n)


def _transposition_family(n: int, pairs) -> Graph:
    gens = []
    for i, j in pairs:
        image = list(range(n))
        image[i - 1], image[j - 1] = j - 1, i - 1
        gens.append(Perm(tuple(image)))
    return cayley_graph(GeneratingSet(SymmetricGroup(n), tuple(gens)))


def alternating_group_graph(n: int) -> Graph:
    """AG_n: Cayley graph of A_n over the 3-cycles (12i)^+-1; 2(n-2)-regular."""
    if n < 3:
        raise ValueError("alternating group graph requires n >= 3")
    gens = []
    for i in range(3, n + 1):
        image = list(range(n))
        image[0], image[1], image[i - 1] = 1, i - 1, 0  # (1,2,i)
        s = Perm(tuple(image))
        gens.append(s)
        inv = list(range(n))
        inv[0], inv[1], inv[i - 1] = i - 1, 0, 1
        gens.append(Perm(tuple(inv)))
    from .groups import PermSubgroup

    spec = PermSubgroup(n, tuple(gens))
    return _with_meta(
        cayley_graph(GeneratingSet(spec, tuple(gens))),
        family="alternating_group_graph", n=n,
    )


def circulant(n: int, jumps) -> Graph:
    """C_n<a_1..a_k>: Cayley graph of Z_n over {+-a_i}; a_k = n/2 is a diagonal."""
    jumps = tuple(jumps)
    if n < 3:
        raise ValueError("circulant requires n >= 3")
    if not jumps or list(jumps) != sorted(set(jumps)):
        raise ValueError("jumps must be strictly increasing and nonempty")
    if jumps[0] < 1 or 2 * jumps[-1] > n:
        raise ValueError("jumps must satisfy 0 < a_1 < ... < a_k <= n/2")
    gens = []
    for a in jumps:
        gens.append(ResidueTuple((a,), (n,)))
        if (-a) % n != a:
            gens.append(ResidueTuple(((-a) % n,), (n,)))
    gs = GeneratingSet(CyclicProduct((n,)), tuple(gens))
    return _with_meta(cayley_graph(gs), family="circulant", n=n, jumps=list(jumps))


def torus(moduli) -> Graph:
    """k-dimensional torus: Cayley graph of Z_{r_1} x ... x Z_{r_k} over +-unit vectors."""
    moduli = tuple(moduli)
    if not moduli or any(m < 2 for m in moduli):
        raise ValueError("torus moduli must all be >= 2")
    gens = []
    for i, m in enumerate(moduli):
        unit = tuple(1 if j == i else 0 for j in range(len(moduli)))
        gens.append(ResidueTuple(unit, moduli))
        neg = tuple((m - 1) if j == i else 0 for j in range(len(moduli)))
        if neg != unit:
            gens.append(ResidueTuple(neg, moduli))
    gs = GeneratingSet(CyclicProduct(moduli), tuple(gens))
    return _with_meta(cayley_graph(gs), family="torus", moduli=list(moduli))


def mesh(dims) -> Graph:
    """Cartesian product of path graphs."""
    dims = tuple(dims)
    if not dims or any(d < 1 for d in dims):
        raise ValueError("mesh dimensions must all be >= 1")
    g = path_graph(dims[0])
    for d in dims[1:]:
        g = cartesian_product(g, path_graph(d))
    return Graph(
        g.adj, None, None,
        {"family": "mesh", "dims": list(dims), "vertex_transitive": all(d <= 2 for d in dims)},
    )


def harary(k: int, n: int) -> Graph:
    """H_{k,n} for even k: join each vertex on a circle to the k/2 closest per side."""
    if not (1 < k < n):
        raise ValueError("harary requires 1 < k < n")
    if k % 2 != 0:
        raise ValueError("only even k is supported")
    g = circulant(n, range(1, k // 2 + 1))
    return _with_meta(g, family="harary", k=k, n=n)


def petersen() -> Graph:
    """Petersen graph: 2-subsets of {1..5}, adjacent when disjoint."""
    verts = list(itertools.combinations(range(1, 6), 2))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[a], index[b])
        for a in verts
        for b in verts
        if a < b and not set(a) & set(b)
    ]
    labels = [f"{a}{b}" for a, b in verts]
    return Graph.from_edges(
        10, edges, vertex_labels=labels,
        family_meta={"family": "petersen", "vertex_transitive": True},
    )


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph requires n >= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(
        n, edges, family_meta={"family": "complete", "n": n, "vertex_transitive": True}
    )


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite requires a, b >= 1")
    edges = [(u, a + v) for u in range(a) for v in range(b)]
    return Graph.from_edges(
        a + b, edges,
        family_meta={"family": "complete_bipartite", "a": a, "b": b,
                     "vertex_transitive": a == b},
    )


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edges(
        n, edges, family_meta={"family": "cycle", "n": n, "vertex_transitive": True}
    )


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path requires n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)]
    return Graph.from_edges(
        n, edges, family_meta={"family": "path", "n": n, "vertex_transitive": n <= 2}
    )


_BUILDERS = {
    "hypercube": (hypercube, ("n",)),
    "folded": (folded_hypercube, ("n",)),
    "augmented": (augmented_cube, ("n",)),
    "star": (star_graph, ("n",)),
    "bubble_sort": (bubble_sort_graph, ("n",)),
    "modified_bubble_sort": (modified_bubble_sort_graph, ("n",)),
    "complete_transposition": (complete_transposition_graph, ("n",)),
    "alternating_group_graph": (alternating_group_graph, ("n",)),
    "circulant": (circulant, ("n", "jumps")),
    "torus": (torus, ("moduli",)),
    "mesh": (mesh, ("dims",)),
    "harary": (harary, ("k", "n")),
    "petersen": (petersen, ()),
    "complete": (complete_graph, ("n",)),
    "complete_bipartite": (complete_bipartite, ("a", "b")),
    "cycle": (cycle_graph, ("n",)),
    "path": (path_graph, ("n",)),
}

FAMILY_NAMES = sorted(_BUILDERS)


def build_family(family: str, **params) -> Graph:
    """Dispatch to a family builder by name; used by the CLI and tests."""
    if family not in _BUILDERS:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES)}")
    fn, wanted = _BUILDERS[family]
    missing = [w for w in wanted if w not in params]
    extra = [p for p in params if p not in wanted]
    if missing or extra:
        raise ValueError(
            f"family {family!r} takes parameters {wanted}; "
            f"missing {missing}, unexpected {extra}"
        )
    return fn(**{w: params[w] for w in wanted})
