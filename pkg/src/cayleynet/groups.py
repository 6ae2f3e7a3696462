"""Finite group elements, group specs and generating-set machinery.

Three element kinds are supported: permutations of ``{1..n}``, binary
words of fixed length, and tuples of residues modulo a list of moduli.

Permutations multiply left-to-right: ``compose(a, b)`` applies ``a``
first, then ``b``, so that the product (123)(12) equals (23).  Cayley
edges join ``h`` to the product ``s`` then ``h`` for each generator
``s``, matching the arc rule ``h -> sh`` used throughout this package.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from .errors import GuardExceeded
from .guards import guard_value


# ---------------------------------------------------------------------------
# Elements

@dataclass(frozen=True)
class Perm:
    """Permutation of {1..n}, stored as a 0-based image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {self.image}")

    @property
    def degree(self) -> int:
        return len(self.image)

    def __str__(self) -> str:
        return format_element(self)


@dataclass(frozen=True)
class Word:
    """Binary word of fixed length (element of Z_2^r)."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"word bits must be 0/1: {self.bits}")

    @property
    def length(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return format_element(self)


@dataclass(frozen=True)
class ResidueTuple:
    """Element of Z_{m_1} x ... x Z_{m_k}."""

    values: tuple[int, ...]
    moduli: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.moduli):
            raise ValueError("values/moduli length mismatch")
        for x, m in zip(self.values, self.moduli):
            if not 0 <= x < m:
                raise ValueError(f"residue {x} out of range for modulus {m}")

    def __str__(self) -> str:
        return format_element(self)


GroupElement = Union[Perm, Word, ResidueTuple]


# ---------------------------------------------------------------------------
# Group specs

@dataclass(frozen=True)
class SymmetricGroup:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("symmetric group degree must be >= 1")


@dataclass(frozen=True)
class BinaryGroup:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("binary group length must be >= 1")


@dataclass(frozen=True)
class CyclicProduct:
    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli or any(m < 2 for m in self.moduli):
            raise ValueError("all moduli must be >= 2")


@dataclass(frozen=True)
class PermSubgroup:
    """Subgroup of a symmetric group given by explicit permutation generators."""

    degree: int
    generators: tuple[Perm, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.degree != self.degree:
                raise ValueError("generator degree mismatch")


GroupSpec = Union[SymmetricGroup, BinaryGroup, CyclicProduct, PermSubgroup]


def identity_of(spec: GroupSpec) -> GroupElement:
    if isinstance(spec, SymmetricGroup):
        return Perm(tuple(range(spec.n)))
    if isinstance(spec, BinaryGroup):
        return Word((0,) * spec.r)
    if isinstance(spec, CyclicProduct):
        return ResidueTuple((0,) * len(spec.moduli), spec.moduli)
    if isinstance(spec, PermSubgroup):
        return Perm(tuple(range(spec.degree)))
    raise TypeError(f"not a group spec: {spec!r}")


def group_order(spec: GroupSpec) -> int | None:
    """Order of the group, or None when it is not known without a closure."""
    if isinstance(spec, SymmetricGroup):
        return math.factorial(spec.n)
    if isinstance(spec, BinaryGroup):
        return 2 ** spec.r
    if isinstance(spec, CyclicProduct):
        return math.prod(spec.moduli)
    return None


def element_in_spec(el: GroupElement, spec: GroupSpec) -> bool:
    if isinstance(spec, SymmetricGroup):
        return isinstance(el, Perm) and el.degree == spec.n
    if isinstance(spec, BinaryGroup):
        return isinstance(el, Word) and el.length == spec.r
    if isinstance(spec, CyclicProduct):
        return isinstance(el, ResidueTuple) and el.moduli == spec.moduli
    if isinstance(spec, PermSubgroup):
        return isinstance(el, Perm) and el.degree == spec.degree
    return False


# ---------------------------------------------------------------------------
# Arithmetic

def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """Product of a and b, applying ``a`` first for permutations."""
    if isinstance(a, Perm) and isinstance(b, Perm):
        if a.degree != b.degree:
            raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
        img_a, img_b = a.image, b.image
        return Perm(tuple(img_b[img_a[i]] for i in range(len(img_a))))
    if isinstance(a, Word) and isinstance(b, Word):
        if a.length != b.length:
            raise ValueError(f"length mismatch: {a.length} vs {b.length}")
        return Word(tuple(x ^ y for x, y in zip(a.bits, b.bits)))
    if isinstance(a, ResidueTuple) and isinstance(b, ResidueTuple):
        if a.moduli != b.moduli:
            raise ValueError(f"moduli mismatch: {a.moduli} vs {b.moduli}")
        return ResidueTuple(
            tuple((x + y) % m for x, y, m in zip(a.values, b.values, a.moduli)),
            a.moduli,
        )
    raise ValueError(f"variant mismatch: {type(a).__name__} vs {type(b).__name__}")


def inverse(a: GroupElement) -> GroupElement:
    if isinstance(a, Perm):
        inv = [0] * a.degree
        for i, j in enumerate(a.image):
            inv[j] = i
        return Perm(tuple(inv))
    if isinstance(a, Word):
        return a
    if isinstance(a, ResidueTuple):
        return ResidueTuple(tuple((-x) % m for x, m in zip(a.values, a.moduli)), a.moduli)
    raise TypeError(f"not a group element: {a!r}")


def element_key(el: GroupElement) -> tuple[int, ...]:
    """Canonical integer encoding, used for sorting and dense indexing."""
    if isinstance(el, Perm):
        return el.image
    if isinstance(el, Word):
        return el.bits
    if isinstance(el, ResidueTuple):
        return el.values
    raise TypeError(f"not a group element: {el!r}")


def is_identity(el: GroupElement) -> bool:
    if isinstance(el, Perm):
        return el.image == tuple(range(el.degree))
    if isinstance(el, Word):
        return not any(el.bits)
    if isinstance(el, ResidueTuple):
        return not any(el.values)
    raise TypeError(f"not a group element: {el!r}")


# ---------------------------------------------------------------------------
# Text notation

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_element(text: str, spec: GroupSpec) -> GroupElement:
    """Parse the canonical text notation of an element of the given group.

    Permutations use 1-based cycle notation such as ``(1,2)(3,4)`` (cycles
    are applied left to right; ``e`` and ``()`` denote the identity).
    Binary words are bit strings such as ``0110``; cyclic-product elements
    are comma lists such as ``2,3``.
    """
    text = text.strip()
    if isinstance(spec, (SymmetricGroup, PermSubgroup)):
        n = spec.n if isinstance(spec, SymmetricGroup) else spec.degree
        if text in ("e", "()", ""):
            return Perm(tuple(range(n)))
        covered = _CYCLE_RE.sub("", text)
        if covered.strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        result = Perm(tuple(range(n)))
        for body in _CYCLE_RE.findall(text):
            entries = [p for p in re.split(r"[,\s]+", body.strip()) if p]
            points = [int(p) for p in entries]
            if any(not 1 <= p <= n for p in points):
                raise ValueError(f"cycle point out of range 1..{n}: {text!r}")
            if len(set(points)) != len(points):
                raise ValueError(f"repeated point inside a cycle: {text!r}")
            if len(points) < 2:
                continue
            image = list(range(n))
            for a, b in zip(points, points[1:] + points[:1]):
                image[a - 1] = b - 1
            result = compose(result, Perm(tuple(image)))
        return result
    if isinstance(spec, BinaryGroup):
        if not re.fullmatch(r"[01]+", text):
            raise ValueError(f"malformed bit string: {text!r}")
        if len(text) != spec.r:
            raise ValueError(f"expected {spec.r} bits, got {len(text)}")
        return Word(tuple(int(c) for c in text))
    if isinstance(spec, CyclicProduct):
        parts = [p for p in text.split(",") if p.strip() != ""]
        if len(parts) != len(spec.moduli):
            raise ValueError(f"expected {len(spec.moduli)} residues, got {len(parts)}")
        return ResidueTuple(tuple(int(p) for p in parts), spec.moduli)
    raise TypeError(f"not a group spec: {spec!r}")


def format_element(el: GroupElement) -> str:
    """Canonical formatter; round-trips with parse_element."""
    if isinstance(el, Perm):
        seen = [False] * el.degree
        cycles = []
        for start in range(el.degree):
            if seen[start] or el.image[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            seen[start] = True
            cur = el.image[start]
            while cur != start:
                cycle.append(cur)
                seen[cur] = True
                cur = el.image[cur]
            cycles.append(cycle)
        if not cycles:
            return "e"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles)
    if isinstance(el, Word):
        return "".join(str(b) for b in el.bits)
    if isinstance(el, ResidueTuple):
        return ",".join(str(x) for x in el.values)
    raise TypeError(f"not a group element: {el!r}")


# ---------------------------------------------------------------------------
# Spec (de)serialization, used by the graph JSON format

def spec_to_dict(spec: GroupSpec) -> dict:
    if isinstance(spec, SymmetricGroup):
        return {"type": "symmetric", "n": spec.n}
    if isinstance(spec, BinaryGroup):
        return {"type": "binary", "r": spec.r}
    if isinstance(spec, CyclicProduct):
        return {"type": "cyclic_product", "moduli": list(spec.moduli)}
    if isinstance(spec, PermSubgroup):
        return {
            "type": "perm_subgroup",
            "degree": spec.degree,
            "generators": [format_element(g) for g in spec.generators],
        }
    raise TypeError(f"not a group spec: {spec!r}")


def spec_from_dict(data: dict) -> GroupSpec:
    kind = data["type"]
    if kind == "symmetric":
        return SymmetricGroup(data["n"])
    if kind == "binary":
        return BinaryGroup(data["r"])
    if kind == "cyclic_product":
        return CyclicProduct(tuple(data["moduli"]))
    if kind == "perm_subgroup":
        degree = data["degree"]
        gens = tuple(
            parse_element(t, SymmetricGroup(degree)) for t in data["generators"]
        )
        return PermSubgroup(degree, gens)
    raise ValueError(f"unknown group spec type {kind!r}")


# ---------------------------------------------------------------------------
# Generating sets

@dataclass(frozen=True)
class GeneratingSet:
    """Ordered generating set for a Cayley construction."""

    spec: GroupSpec
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        seen = set()
        for el in self.elements:
            if not element_in_spec(el, self.spec):
                raise ValueError(f"element {el} incompatible with {self.spec}")
            key = element_key(el)
            if key in seen:
                raise ValueError(f"duplicate generator {format_element(el)}")
            seen.add(key)


@dataclass(frozen=True)
class ValidityReport:
    identity_free: bool
    symmetric: bool
    generates: bool
    closure_order: int | None = None


def validate_generating_set(gs: GeneratingSet, closure_guard: int | None = None) -> ValidityReport:
    """Check the three generating-set conditions: e not in S, S = S^-1, <S> = H."""
    keys = {element_key(el) for el in gs.elements}
    identity_free = element_key(identity_of(gs.spec)) not in keys
    symmetric = all(element_key(inverse(el)) in keys for el in gs.elements)
    if isinstance(gs.spec, PermSubgroup):
        return ValidityReport(identity_free, symmetric, True, None)
    order = group_order(gs.spec)
    closed = closure(gs, guard=closure_guard) if gs.elements else [identity_of(gs.spec)]
    return ValidityReport(identity_free, symmetric, len(closed) == order, len(closed))


def closure(gs: GeneratingSet, guard: int | None = None) -> list[GroupElement]:
    """Breadth-first closure of <S> starting from the identity.

    Layers are emitted in BFS order, each layer sorted by the canonical
    encoding, which makes the output (and hence Cayley vertex numbering)
    deterministic.  In a finite group the products of generators alone
    already reach every element of <S>.
    """
    if not gs.elements:
        raise ValueError("closure of an empty generating set")
    limit = guard_value("closure", guard)
    ident = identity_of(gs.spec)
    out = [ident]
    seen = {element_key(ident)}
    frontier = [ident]
    while frontier:
        nxt = {}
        for h in frontier:
            for s in gs.elements:
                v = compose(s, h)
                key = element_key(v)
                if key not in seen:
                    seen.add(key)
                    nxt[key] = v
                    if len(seen) > limit:
                        raise GuardExceeded(
                            f"closure exceeds guard of {limit} elements"
                        )
        frontier = [nxt[k] for k in sorted(nxt)]
        out.extend(frontier)
    return out
