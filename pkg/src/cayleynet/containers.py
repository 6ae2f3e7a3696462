"""Explicit parallel-path containers in the hypercube and folded hypercube.

Both constructions reduce to a normal form (source at the origin, the
target's 1-bits sorted to the front by a stable coordinate permutation),
emit paths as generator sequences, and map everything back through the
two reductions.  The sequences are the cyclic shifts of the shortest
path's labels plus one detour per unused generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .groups import BinaryGroup, Word, parse_element


@dataclass(frozen=True)
class Container:
    """A set of internally vertex-disjoint paths between two vertices.

    Paths hold vertex display names; width is the path count, length the
    longest path (in edges) and quality the ratio width / average length.
    """

    source: str
    target: str
    paths: tuple[tuple[str, ...], ...]
    width: int
    length: int
    avg_length: Fraction
    quality: Fraction


def container_from_paths(source: str, target: str, paths) -> Container:
    paths = tuple(tuple(p) for p in paths)
    if not paths:
        return Container(source, target, (), 0, 0, Fraction(0), Fraction(0))
    lengths = [len(p) - 1 for p in paths]
    total = sum(lengths)
    width = len(paths)
    avg = Fraction(total, width)
    quality = Fraction(width) / avg if total else Fraction(0)
    return Container(source, target, paths, width, max(lengths), avg, quality)


# ---------------------------------------------------------------------------
# Word helpers

def _as_bits(w, n: int) -> tuple[int, ...]:
    if isinstance(w, Word):
        word = w
    else:
        word = parse_element(str(w), BinaryGroup(n))
    if word.length != n:
        raise ValueError(f"expected a word of length {n}")
    return word.bits


def _bits_str(bits) -> str:
    return "".join(str(b) for b in bits)


def _paths_from_sequences(n, sequences, x_bits, coord_order):
    """Turn generator-index sequences (index n = the all-ones flip) into
    vertex paths in the original coordinates, starting at x.

    Normal-space coordinate j corresponds to original coordinate
    coord_order[j]; the all-ones flip commutes with both reductions.
    """
    paths = []
    for seq in sequences:
        current = list(x_bits)
        path = [_bits_str(current)]
        for gen in seq:
            if gen == n:
                current = [b ^ 1 for b in current]
            else:
                current[coord_order[gen]] ^= 1
            path.append(_bits_str(current))
        paths.append(tuple(path))
    return paths


def _normalize(n, x, y):
    x_bits = _as_bits(x, n)
    y_bits = _as_bits(y, n)
    if x_bits == y_bits:
        raise ValueError("container endpoints must differ")
    diff = [a ^ b for a, b in zip(x_bits, y_bits)]
    r = sum(diff)
    # stable permutation sending the differing coordinates to the front
    coord_order = [i for i, d in enumerate(diff) if d] + [i for i, d in enumerate(diff) if not d]
    return x_bits, y_bits, r, coord_order


def hypercube_container(n: int, x, y) -> Container:
    """Width-n container in Q_n between two distinct vertices.

    With r the Hamming distance, the container has r cyclic-shift paths
    of length r and n - r detour paths of length r + 2.
    """
    if n < 1:
        raise ValueError("hypercube container requires n >= 1")
    x_bits, y_bits, r, order = _normalize(n, x, y)
    sequences = [[(shift + i) % r for i in range(r)] for shift in range(r)]
    for i in range(r, n):
        sequences.append([i] + list(range(r)) + [i])
    paths = _paths_from_sequences(n, sequences, x_bits, order)
    return container_from_paths(_bits_str(x_bits), _bits_str(y_bits), paths)


def folded_container(n: int, x, y) -> Container:
    """Width-(n+1) container in FQ_n (n >= 4) between two distinct vertices.

    For r <= ceil(n/2) the hypercube paths are reused and one extra path
    routes through the complement edge; for larger r every path uses the
    complement edge, keeping the length at most floor(n/2) + 2.
    """
    if n < 4:
        raise ValueError("folded container requires n >= 4")
    x_bits, y_bits, r, order = _normalize(n, x, y)
    u = n  # generator index of the all-ones flip
    sequences: list[list[int]] = []
    if r <= (n + 1) // 2:
        sequences += [[(shift + i) % r for i in range(r)] for shift in range(r)]
        for i in range(r, n):
            sequences.append([i] + list(range(r)) + [i])
        sequences.append([u] + list(range(r)) + [u])
    else:
        base = [u] + list(range(r, n))
        k = len(base)  # n - r + 1
        sequences += [[base[(shift + i) % k] for i in range(k)] for shift in range(k)]
        for i in range(r):
            sequences.append([i, u] + list(range(r, n)) + [i])
    paths = _paths_from_sequences(n, sequences, x_bits, order)
    return container_from_paths(_bits_str(x_bits), _bits_str(y_bits), paths)


# ---------------------------------------------------------------------------
# Verification

@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[str, ...]
    width: int
    length: int
    avg_length: Fraction
    quality: Fraction


def verify_container(g: Graph, c: Container) -> VerificationReport:
    """Check a container against a host graph.

    Validates endpoints, adjacency of consecutive vertices, simplicity of
    each path and pairwise internal disjointness, then recomputes the
    metrics.  Violations pinpoint the offending path (pair) indices.
    """
    if g.vertex_labels:
        index = {name: i for i, name in enumerate(g.vertex_labels)}
    else:
        index = {str(i): i for i in range(g.n)}
    violations = []
    resolved = []
    for pi, path in enumerate(c.paths):
        try:
            ids = [index[name] for name in path]
        except KeyError as exc:
            violations.append(f"path {pi}: unknown vertex {exc.args[0]!r}")
            resolved.append(None)
            continue
        resolved.append(ids)
        if not path:
            violations.append(f"path {pi}: empty")
            continue
        if path[0] != c.source:
            violations.append(f"path {pi}: does not start at source")
        if path[-1] != c.target:
            violations.append(f"path {pi}: does not end at target")
        if len(set(ids)) != len(ids):
            violations.append(f"path {pi}: repeats a vertex")
        for a, b in zip(ids, ids[1:]):
            if not g.has_edge(a, b):
                violations.append(
                    f"path {pi}: {g.name_of(a)} and {g.name_of(b)} are not adjacent"
                )
    for i in range(len(resolved)):
        for j in range(i + 1, len(resolved)):
            if resolved[i] is None or resolved[j] is None:
                continue
            shared = set(resolved[i][1:-1]) & set(resolved[j][1:-1])
            if shared:
                violations.append(f"paths {i} and {j} share internal vertices")
    lengths = [len(p) - 1 for p in c.paths if p]
    width = len(c.paths)
    total = sum(lengths)
    avg = Fraction(total, width) if width else Fraction(0)
    quality = Fraction(width) / avg if total else Fraction(0)
    if width != c.width:
        violations.append(f"recorded width {c.width} != {width}")
    if lengths and max(lengths) != c.length:
        violations.append(f"recorded length {c.length} != {max(lengths)}")
    if width and avg != c.avg_length:
        violations.append(f"recorded avg length {c.avg_length} != {avg}")
    if width and quality != c.quality:
        violations.append(f"recorded quality {c.quality} != {quality}")
    return VerificationReport(
        ok=not violations,
        violations=tuple(violations),
        width=width,
        length=max(lengths) if lengths else 0,
        avg_length=avg,
        quality=quality,
    )
