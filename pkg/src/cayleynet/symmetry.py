"""Exact automorphism groups, orbits, transitivity, isomorphism and normality.

The search lists every automorphism of a small graph by backtracking
over vertex images, pruned by an equitable-partition refinement seeded
with degrees and distance profiles.  Adjacency is kept as integer
bitmasks so candidate filtering is a few big-int ANDs per node.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from . import groups
from .errors import GuardExceeded, UnsupportedInput
from .graphs import Graph, cayley_data
from .guards import guard_value
from .metrics import bfs_distances


# ---------------------------------------------------------------------------
# Color refinement

def _distance_seed(g: Graph) -> list[tuple]:
    seeds = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        profile: dict[int, int] = {}
        for d in dist:
            profile[d] = profile.get(d, 0) + 1
        seeds.append((len(g.adj[v]), tuple(sorted(profile.items()))))
    return seeds


def _joint_stable_colors(graphs: list[Graph]) -> list[list[int]]:
    """Deterministic 1-WL refinement computed jointly over several graphs."""
    sigs = [_distance_seed(g) for g in graphs]
    colors = _assign_ids(sigs)
    while True:
        new_sigs = []
        for g, cols in zip(graphs, colors):
            new_sigs.append(
                [
                    (cols[v], tuple(sorted(cols[w] for w in g.adj[v])))
                    for v in range(g.n)
                ]
            )
        new_colors = _assign_ids(new_sigs)
        if all(
            _partition_key(nc) == _partition_key(oc)
            for nc, oc in zip(new_colors, colors)
        ):
            return new_colors
        colors = new_colors


def _assign_ids(signature_lists):
    all_sigs = sorted({s for sigs in signature_lists for s in sigs})
    ids = {s: i for i, s in enumerate(all_sigs)}
    return [[ids[s] for s in sigs] for sigs in signature_lists]


def _partition_key(colors):
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return sorted(tuple(vs) for vs in classes.values())


# ---------------------------------------------------------------------------
# Backtracking search over vertex images

def _adj_masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in nbrs) for nbrs in g.adj]


def _search_order(g: Graph, colors) -> list[int]:
    """Order vertices so each one touches as many earlier ones as possible."""
    n = g.n
    class_size = {}
    for c in colors:
        class_size[c] = class_size.get(c, 0) + 1
    remaining = set(range(n))
    order = []
    mapped_nbrs = [0] * n
    while remaining:
        v = min(
            remaining,
            key=lambda u: (-mapped_nbrs[u], class_size[colors[u]], colors[u], u),
        )
        order.append(v)
        remaining.discard(v)
        for w in g.adj[v]:
            mapped_nbrs[w] += 1
    return order


def _search_mappings(
    x: Graph,
    y: Graph,
    colors_x,
    colors_y,
    *,
    limit: int | None = None,
    node_budget: int | None = None,
    element_cap: int | None = None,
):
    """All color/adjacency-preserving bijections V(X) -> V(Y), as image tuples."""
    n = x.n
    if n != y.n or sorted(colors_x) != sorted(colors_y):
        return []
    budget = guard_value("aut_nodes", node_budget)
    cap = guard_value("aut_elements", element_cap)
    adj_x = _adj_masks(x)
    adj_y = _adj_masks(y)
    full = (1 << n) - 1
    non_adj_y = [full & ~m for m in adj_y]
    color_mask_y = {}
    for v, c in enumerate(colors_y):
        color_mask_y[c] = color_mask_y.get(c, 0) | (1 << v)
    order = _search_order(x, colors_x)
    # for each level, the earlier levels split into neighbors / non-neighbors
    prev_nbrs, prev_others = [], []
    for k, v in enumerate(order):
        nbrs, others = [], []
        for j in range(k):
            (nbrs if (adj_x[v] >> order[j]) & 1 else others).append(j)
        prev_nbrs.append(nbrs)
        prev_others.append(others)
    found: list[tuple[int, ...]] = []
    image = [0] * n
    nodes = 0

    def descend(k: int, used: int) -> bool:
        nonlocal nodes
        if k == n:
            img = [0] * n
            for j, v in enumerate(order):
                img[v] = image[j]
            found.append(tuple(img))
            if len(found) > cap:
                raise GuardExceeded(f"more than {cap} mappings")
            return limit is not None and len(found) >= limit
        v = order[k]
        cand = color_mask_y[colors_x[v]] & ~used
        for j in prev_nbrs[k]:
            cand &= adj_y[image[j]]
        for j in prev_others[k]:
            cand &= non_adj_y[image[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            nodes += 1
            if nodes > budget:
                raise GuardExceeded(f"search exceeded node budget {budget}")
            image[k] = w
            if descend(k + 1, used | low):
                return True
        return False

    descend(0, 0)
    return found


# ---------------------------------------------------------------------------
# Automorphism groups

@dataclass(frozen=True)
class AutGroup:
    elements: tuple[tuple[int, ...], ...]
    order: int
    generators: tuple[tuple[int, ...], ...]


def automorphism_group(
    g: Graph,
    *,
    max_vertices: int | None = None,
    node_budget: int | None = None,
    element_cap: int | None = None,
) -> AutGroup:
    """Complete automorphism list of a small graph, deterministically ordered."""
    limit = guard_value("aut_vertices", max_vertices)
    if g.n > limit:
        raise GuardExceeded(f"{g.n} vertices exceeds automorphism guard {limit}")
    if g.n == 0:
        return AutGroup(((),), 1, ())
    (colors,) = _joint_stable_colors([g])
    elements = _search_mappings(
        g, g, colors, colors, node_budget=node_budget, element_cap=element_cap
    )
    elements = sorted(elements)
    masks = _adj_masks(g)
    for el in elements:
        _check_automorphism(g, el, masks)
    return AutGroup(tuple(elements), len(elements), tuple(_generators(elements)))


def _check_automorphism(g: Graph, perm, masks) -> None:
    """Independent re-verification that perm preserves adjacency both ways."""
    for v in range(g.n):
        mapped = 0
        for w in g.adj[v]:
            mapped |= 1 << perm[w]
        if mapped != masks[perm[v]]:
            raise AssertionError(f"search returned a non-automorphism: {perm}")


def _perm_mul(a, b):
    """Apply a, then b."""
    return tuple(b[x] for x in a)


def _perm_closure(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                v = _perm_mul(h, s)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def _generators(elements):
    if not elements:
        return []
    n = len(elements[0])
    target = len(elements)
    gens: list[tuple[int, ...]] = []
    generated = {tuple(range(n))}
    for el in elements:
        if el not in generated:
            gens.append(el)
            generated = _perm_closure(gens, n)
            if len(generated) >= target:
                break
    return gens


# ---------------------------------------------------------------------------
# Orbits and transitivity

def orbits_under(generators, items, apply):
    """Orbit partition of items under a generator action; deterministic order."""
    index = {item: i for i, item in enumerate(items)}
    seen = set()
    orbits = []
    for item in items:
        if item in seen:
            continue
        orb = [item]
        seen.add(item)
        queue = deque([item])
        while queue:
            cur = queue.popleft()
            for gen in generators:
                nxt = apply(cur, gen)
                if nxt not in seen:
                    seen.add(nxt)
                    orb.append(nxt)
                    queue.append(nxt)
        orbits.append(sorted(orb, key=index.__getitem__))
    return orbits


def vertex_orbits(aut: AutGroup, n: int):
    gens = aut.generators or aut.elements
    return orbits_under(gens, list(range(n)), lambda v, p: p[v])


def edge_orbits(aut: AutGroup, g: Graph):
    gens = aut.generators or aut.elements

    def apply(edge, p):
        a, b = p[edge[0]], p[edge[1]]
        return (a, b) if a < b else (b, a)

    return orbits_under(gens, g.edges(), apply)


def _k_arcs(g: Graph, k: int):
    arcs = [(v,) for v in range(g.n)]
    for _ in range(k):
        arcs = [
            arc + (w,)
            for arc in arcs
            for w in g.adj[arc[-1]]
            if len(arc) < 2 or w != arc[-2]
        ]
    return arcs


def _k_arc_transitive(g: Graph, aut: AutGroup, k: int) -> bool:
    arcs = _k_arcs(g, k)
    if not arcs:
        return False
    gens = aut.generators or aut.elements
    orbs = orbits_under(gens, arcs, lambda arc, p: tuple(p[v] for v in arc))
    return len(orbs) == 1


@dataclass(frozen=True)
class TransitivityReport:
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    distance_transitive: bool
    k_arc_transitive_max: int
    vertex_orbit_count: int
    edge_orbit_count: int


def transitivity_report(g: Graph, k_cap: int = 3, aut: AutGroup | None = None) -> TransitivityReport:
    if aut is None:
        aut = automorphism_group(g)
    v_orbits = vertex_orbits(aut, g.n)
    e_orbits = edge_orbits(aut, g)
    vertex_transitive = len(v_orbits) == 1
    edge_transitive = len(e_orbits) == 1 and bool(g.edges())
    k_max = 0
    for k in range(1, k_cap + 1):
        if _k_arc_transitive(g, aut, k):
            k_max = k
        else:
            break
    return TransitivityReport(
        vertex_transitive=vertex_transitive,
        edge_transitive=edge_transitive,
        arc_transitive=k_max >= 1,
        distance_transitive=_distance_transitive(g, aut, vertex_transitive),
        k_arc_transitive_max=k_max,
        vertex_orbit_count=len(v_orbits),
        edge_orbit_count=len(e_orbits),
    )


def _distance_transitive(g: Graph, aut: AutGroup, vertex_transitive: bool) -> bool:
    """Vertex-transitive + stabilizer transitive on every distance layer."""
    if not vertex_transitive or g.n == 0:
        return False
    dist = bfs_distances(g, 0)
    if -1 in dist:
        return False
    stab = [p for p in aut.elements if p[0] == 0]
    layers: dict[int, list[int]] = {}
    for v, d in enumerate(dist):
        layers.setdefault(d, []).append(v)
    for d, layer in layers.items():
        if d == 0:
            continue
        rep = layer[0]
        orbit = {p[rep] for p in stab}
        if orbit != set(layer):
            return False
    return True


def stabilizer_orbits(g: Graph, v: int, aut: AutGroup | None = None) -> list[int]:
    """Sorted orbit sizes of the vertex stabilizer G_v acting on V."""
    if aut is None:
        aut = automorphism_group(g)
    stab = [p for p in aut.elements if p[v] == v]
    orbs = orbits_under(stab, list(range(g.n)), lambda u, p: p[u])
    return sorted(len(o) for o in orbs)


# ---------------------------------------------------------------------------
# Isomorphism

def graph_isomorphic(
    x: Graph,
    y: Graph,
    *,
    max_vertices: int | None = None,
    node_budget: int | None = None,
):
    """A vertex bijection X -> Y preserving adjacency, or None."""
    limit = guard_value("aut_vertices", max_vertices)
    if max(x.n, y.n) > limit:
        raise GuardExceeded(f"{max(x.n, y.n)} vertices exceeds guard {limit}")
    if x.n != y.n or x.edge_count() != y.edge_count():
        return None
    colors_x, colors_y = _joint_stable_colors([x, y])
    res = _search_mappings(
        x, y, colors_x, colors_y, limit=1, node_budget=node_budget
    )
    if not res:
        return None
    mapping = res[0]
    for u in range(x.n):
        for w in x.adj[u]:
            if not y.has_edge(mapping[u], mapping[w]):
                raise AssertionError("search returned a non-isomorphism")
    return mapping


# ---------------------------------------------------------------------------
# Cayley-specific machinery

def right_regular_action(g: Graph) -> list[tuple[int, ...]]:
    """The translations x -> xh of a Cayley graph as vertex permutations."""
    spec, elements, _ = cayley_data(g)
    index = {groups.element_key(el): i for i, el in enumerate(elements)}
    perms = []
    masks = _adj_masks(g)
    for h in elements:
        perm = tuple(
            index[groups.element_key(groups.compose(x, h))] for x in elements
        )
        mapped_ok = all(
            masks[perm[v]] == sum(1 << perm[w] for w in g.adj[v]) for v in range(g.n)
        )
        if not mapped_ok:
            raise AssertionError("translation is not an automorphism")
        perms.append(perm)
    return perms


def _perm_order(p) -> int:
    n = len(p)
    seen = [False] * n
    order = 1
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = p[cur]
            length += 1
        order = math.lcm(order, length)
    return order


def _is_single_cycle(p) -> bool:
    n = len(p)
    cur = p[0]
    steps = 1
    while cur != 0:
        cur = p[cur]
        steps += 1
    return steps == n


@dataclass(frozen=True)
class RegularSubgroupResult:
    status: str  # "found" | "none" | "unknown"
    elements: tuple[tuple[int, ...], ...] | None = None


def find_regular_subgroup(aut: AutGroup, n: int) -> RegularSubgroupResult:
    """Search Aut(X) for an order-n subgroup acting regularly on the vertices.

    Tries cyclic subgroups, then closures of pairs of fixed-point-free
    elements, and (for n = 8, where Z_2^3 needs three generators) triples.
    Every non-identity element of a regular subgroup is fixed-point-free
    with order dividing n, and every group of order <= 12 is generated by
    at most three elements, so for n <= 12 an unsuccessful search proves
    there is no regular subgroup; beyond that it returns "unknown".
    """
    if aut.order % n != 0:
        return RegularSubgroupResult("none")
    fpf = [
        p
        for p in aut.elements
        if all(p[v] != v for v in range(n)) and n % _perm_order(p) == 0
    ]
    for p in fpf:
        if _is_single_cycle(p):
            return RegularSubgroupResult("found", tuple(sorted(_perm_closure([p], n))))
    sizes = [2, 3] if n == 8 else [2]
    for size in sizes:
        for combo in itertools.combinations(fpf, size):
            closure = _bounded_closure(combo, n, cap=n)
            if closure is None or len(closure) != n:
                continue
            if _acts_regularly(closure, n):
                return RegularSubgroupResult("found", tuple(sorted(closure)))
    return RegularSubgroupResult("none" if n <= 12 else "unknown")


def _bounded_closure(gens, n, cap):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                v = _perm_mul(h, s)
                if v not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def _acts_regularly(elements, n) -> bool:
    if len(elements) != n:
        return False
    ident = tuple(range(n))
    images_of_0 = set()
    for p in elements:
        if p != ident and any(p[v] == v for v in range(n)):
            return False
        images_of_0.add(p[0])
    return len(images_of_0) == n


# ---------------------------------------------------------------------------
# Aut(H, S) and normality

@dataclass(frozen=True)
class AutFixingSet:
    order: int
    kind: str  # "linear" | "transposition_graph" | "abstract"
    description: str


def aut_group_fixing_s(gs: groups.GeneratingSet) -> AutFixingSet:
    """Group automorphisms of H fixing the generating set S setwise.

    Supported shapes: binary groups (linear maps over F_2 determined by
    images of a basis inside S), symmetric groups with S a set of
    transpositions (Aut of the transposition graph), and any enumerable
    group of order at most 64 (brute force over Aut(H)).
    """
    spec = gs.spec
    if isinstance(spec, groups.BinaryGroup):
        return _aut_fixing_binary(gs)
    if isinstance(spec, groups.SymmetricGroup) and all(
        isinstance(s, groups.Perm) and _is_transposition(s) for s in gs.elements
    ):
        return _aut_fixing_transpositions(gs)
    order = groups.group_order(spec)
    if order is None:
        order = len(groups.closure(gs))
    if order <= 64:
        return _aut_fixing_abstract(gs)
    raise UnsupportedInput(
        "Aut(H,S) supported only for binary groups, transposition sets, "
        "or groups of order <= 64"
    )


def _is_transposition(p: groups.Perm) -> bool:
    moved = [i for i, j in enumerate(p.image) if i != j]
    return len(moved) == 2


def _aut_fixing_binary(gs: groups.GeneratingSet) -> AutFixingSet:
    r = gs.spec.r
    cols = [sum(b << i for i, b in enumerate(s.bits)) for s in gs.elements]
    col_set = set(cols)
    # greedy basis of span(S)
    basis: list[int] = []
    reduced: list[int] = []
    coords_of: dict[int, int] = {}
    for c in cols:
        v = c
        mask = 0
        for i, b in enumerate(reduced):
            if v & (b & -b):
                v ^= b
                mask ^= coords_of[b]
        if v:
            basis.append(c)
            reduced.append(v)
            coords_of[v] = mask ^ (1 << (len(basis) - 1))
    if len(basis) != r:
        raise UnsupportedInput("S must span the binary group")

    def coords(c: int) -> int:
        v, mask = c, 0
        for b in reduced:
            if v & (b & -b):
                v ^= b
                mask ^= coords_of[b]
        if v:
            raise AssertionError("column outside span")
        return mask

    col_coords = [coords(c) for c in cols]
    count = 0
    for images in itertools.permutations(cols, r):
        mapped = []
        ok = True
        for cc in col_coords:
            out = 0
            for i in range(r):
                if cc >> i & 1:
                    out ^= images[i]
            if out not in col_set:
                ok = False
                break
            mapped.append(out)
        if ok and len(set(mapped)) == len(cols):
            count += 1
    return AutFixingSet(count, "linear", f"linear maps of F_2^{r} fixing S")


def _aut_fixing_transpositions(gs: groups.GeneratingSet) -> AutFixingSet:
    from .graphs import Graph as _G

    n = gs.spec.n
    edges = []
    for s in gs.elements:
        moved = [i for i, j in enumerate(s.image) if i != j]
        edges.append((moved[0], moved[1]))
    t_graph = _G.from_edges(n, edges)
    aut = automorphism_group(t_graph)
    return AutFixingSet(
        aut.order, "transposition_graph",
        "conjugations by automorphisms of the transposition graph",
    )


def _aut_fixing_abstract(gs: groups.GeneratingSet) -> AutFixingSet:
    elements = groups.closure(gs) if gs.elements else [groups.identity_of(gs.spec)]
    # closure() only reaches <S>; for a full group spec enumerate it instead
    order = groups.group_order(gs.spec)
    if order is not None and len(elements) != order:
        elements = _enumerate_group(gs.spec)
    index = {groups.element_key(el): i for i, el in enumerate(elements)}
    size = len(elements)
    mul = [
        [index[groups.element_key(groups.compose(a, b))] for b in elements]
        for a in elements
    ]
    ident = index[groups.element_key(groups.identity_of(gs.spec))]
    orders = [_index_order(mul, ident, i) for i in range(size)]
    # minimal generating sequence
    gens: list[int] = []
    generated = {ident}
    for i in range(size):
        if i not in generated:
            gens.append(i)
            generated = _index_closure(mul, ident, gens)
            if len(generated) == size:
                break
    by_order: dict[int, list[int]] = {}
    for i in range(size):
        by_order.setdefault(orders[i], []).append(i)
    s_set = {index[groups.element_key(s)] for s in gs.elements}
    count = 0
    for images in itertools.product(*[by_order[orders[g]] for g in gens]):
        phi = _extend_homomorphism(mul, ident, gens, images, size)
        if phi is None:
            continue
        if {phi[s] for s in s_set} == s_set:
            count += 1
    return AutFixingSet(count, "abstract", "brute force over Aut(H)")


def _enumerate_group(spec) -> list:
    if isinstance(spec, groups.CyclicProduct):
        vals = itertools.product(*[range(m) for m in spec.moduli])
        return [groups.ResidueTuple(v, spec.moduli) for v in vals]
    if isinstance(spec, groups.SymmetricGroup):
        return [groups.Perm(p) for p in itertools.permutations(range(spec.n))]
    if isinstance(spec, groups.BinaryGroup):
        return [
            groups.Word(b) for b in itertools.product((0, 1), repeat=spec.r)
        ]
    raise UnsupportedInput(f"cannot enumerate {spec!r}")


def _index_order(mul, ident, i) -> int:
    cur = i
    k = 1
    while cur != ident:
        cur = mul[cur][i]
        k += 1
    return k


def _index_closure(mul, ident, gens):
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                v = mul[h][s]
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def _extend_homomorphism(mul, ident, gens, images, size):
    """phi determined by generator images via BFS on words; None if inconsistent."""
    phi = [-1] * size
    phi[ident] = ident
    frontier = [ident]
    assigned = 1
    while frontier:
        nxt = []
        for h in frontier:
            for g, img in zip(gens, images):
                v = mul[h][g]
                target = mul[phi[h]][img]
                if phi[v] == -1:
                    phi[v] = target
                    assigned += 1
                    nxt.append(v)
                elif phi[v] != target:
                    return None
        frontier = nxt
    if assigned != size or len(set(phi)) != size:
        return None
    # full homomorphism check
    for a in range(size):
        for b in range(size):
            if phi[mul[a][b]] != mul[phi[a]][phi[b]]:
                return None
    return phi


@dataclass(frozen=True)
class NormalityVerdict:
    normal: bool
    grr: bool
    aut_order: int
    predicted_order: int
    group_order: int
    aut_fixing_order: int


def normality_verdict(g: Graph, aut: AutGroup | None = None) -> NormalityVerdict:
    """Normality test: Aut(X) equals R(H) x| Aut(H,S) iff the orders match.

    Since R(H) * G_e is always the full automorphism group and Aut(H,S)
    is a subgroup of G_e, equality of |Aut(X)| with |H| * |Aut(H,S)|
    is equivalent to normality; |Aut(X)| = |H| is the GRR condition.
    """
    spec, elements, gens = cayley_data(g)
    gs = groups.GeneratingSet(spec, tuple(gens))
    if aut is None:
        aut = automorphism_group(g)
    fixing = aut_group_fixing_s(gs)
    h_order = g.n
    predicted = h_order * fixing.order
    return NormalityVerdict(
        normal=aut.order == predicted,
        grr=aut.order == h_order,
        aut_order=aut.order,
        predicted_order=predicted,
        group_order=h_order,
        aut_fixing_order=fixing.order,
    )
