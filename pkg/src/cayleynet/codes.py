"""Cayley graphs generated by binary matrices and the column-sum condition."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, cayley_graph
from .groups import BinaryGroup, GeneratingSet, Word


@dataclass(frozen=True)
class BinaryMatrix:
    """r x n matrix over F_2, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("matrix must have at least one row")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise ValueError("rows must have equal lengths")
            if any(b not in (0, 1) for b in row):
                raise ValueError("entries must be 0/1")
        if width == 0:
            raise ValueError("matrix must have at least one column")

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]


def parse_matrix(text: str) -> BinaryMatrix:
    """One row of '0'/'1' characters per line; '#' starts a comment."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(tuple(int(c) for c in line))
    return BinaryMatrix(tuple(rows))


def format_matrix(m: BinaryMatrix) -> str:
    return "\n".join("".join(str(b) for b in row) for row in m.rows) + "\n"


def rank_f2(m: BinaryMatrix) -> int:
    """Rank over F_2 by Gaussian elimination on bitmask rows."""
    masks = [sum(b << j for j, b in enumerate(row)) for row in m.rows]
    rank = 0
    for col in range(m.n):
        bit = 1 << col
        pivot = next((i for i in range(rank, len(masks)) if masks[i] & bit), None)
        if pivot is None:
            continue
        masks[rank], masks[pivot] = masks[pivot], masks[rank]
        for i in range(len(masks)):
            if i != rank and masks[i] & bit:
                masks[i] ^= masks[rank]
        rank += 1
    return rank


def repetition_check_matrix(n: int) -> BinaryMatrix:
    """(n-1) x n parity-check matrix [I | 1] of the length-n repetition code."""
    if n < 2:
        raise ValueError("repetition code requires length >= 2")
    rows = tuple(
        tuple(1 if j == i or j == n - 1 else 0 for j in range(n))
        for i in range(n - 1)
    )
    return BinaryMatrix(rows)


def column_sum_condition(m: BinaryMatrix):
    """True iff no column equals the sum of two distinct columns.

    Returns (ok, witness) where the witness names column indices (i, j, k)
    with column i + column j = column k.  Equal columns sum to zero, which
    is never a column, so only distinct pairs are examined.
    """
    cols = m.columns()
    index = {}
    for k, c in enumerate(cols):
        index.setdefault(c, k)
    for i in range(m.n):
        for j in range(i + 1, m.n):
            total = tuple(a ^ b for a, b in zip(cols[i], cols[j]))
            if total in index:
                return False, (i, j, index[total])
    return True, None


def cayley_from_matrix(m: BinaryMatrix, guard: int | None = None) -> Graph:
    """Cay(Z_2^r, columns of the matrix).

    Zero columns are rejected.  Duplicate columns collapse to a single
    generator with a warning; a rank-deficient matrix yields the graph on
    the column span, flagged "subgroup graph".
    """
    if m.r > m.n:
        raise ValueError("matrix must satisfy r <= n for the Cayley construction")
    warnings = []
    gens: list[Word] = []
    seen = set()
    for j, col in enumerate(m.columns()):
        if not any(col):
            raise ValueError(f"column {j} is zero")
        if col in seen:
            warnings.append(f"duplicate column {j} collapsed")
            continue
        seen.add(col)
        gens.append(Word(col))
    rank = rank_f2(m)
    if rank < m.r:
        warnings.append(
            f"rank {rank} < {m.r}: subgroup graph on the column span"
        )
    gs = GeneratingSet(BinaryGroup(m.r), tuple(gens))
    g = cayley_graph(gs, guard=guard)
    meta = dict(g.family_meta)
    meta["family"] = "matrix_cayley"
    meta["matrix_rows"] = ["".join(str(b) for b in row) for row in m.rows]
    if warnings:
        meta["warnings"] = warnings
    return Graph(g.adj, g.vertex_labels, g.edge_labels, meta)
