"""Stable JSON and DOT serialization for graphs and containers.

The graph format is ``cayley-net/1``: vertex count, sorted edge list,
optional vertex labels, optional edge labels keyed "u-v", and the
family_meta provenance block.  Output is byte-stable: keys sorted, no
timestamps inside data payloads.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .containers import Container, VerificationReport
from .graphs import Graph

FORMAT = "cayley-net/1"


def graph_to_dict(g: Graph) -> dict:
    data: dict = {"format": FORMAT, "n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.vertex_labels is not None:
        data["vertex_labels"] = list(g.vertex_labels)
    if g.edge_labels is not None:
        data["edge_labels"] = {
            f"{u}-{v}": lab for (u, v), lab in sorted(g.edge_labels.items())
        }
    if g.family_meta is not None:
        data["family_meta"] = g.family_meta
    return data


def graph_from_dict(data: dict) -> Graph:
    if data.get("format") != FORMAT:
        raise ValueError(f"unsupported graph format {data.get('format')!r}")
    edge_labels = None
    if "edge_labels" in data:
        edge_labels = {}
        for key, lab in data["edge_labels"].items():
            u, _, v = key.partition("-")
            edge_labels[(int(u), int(v))] = lab
    return Graph.from_edges(
        data["n"],
        [tuple(e) for e in data["edges"]],
        vertex_labels=data.get("vertex_labels"),
        edge_labels=edge_labels,
        family_meta=data.get("family_meta"),
    )


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def graph_to_json(g: Graph) -> str:
    return dumps(graph_to_dict(g))


def graph_from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))


def graph_digest(g: Graph) -> str:
    payload = json.dumps(
        {"n": g.n, "edges": [list(e) for e in g.edges()]}, sort_keys=True
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _dot_name(name: str) -> str:
    return '"' + name.replace('"', r"\"") + '"'


def graph_to_dot(g: Graph) -> str:
    """Undirected DOT with edges sorted by (min endpoint, max endpoint)."""
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {_dot_name(g.name_of(v))};")
    for u, v in g.edges():
        label = ""
        if g.edge_labels is not None:
            label = f' [label="{g.edge_labels[(u, v)]}"]'
        lines.append(f"  {_dot_name(g.name_of(u))} -- {_dot_name(g.name_of(v))}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(labels: list[str], arcs) -> str:
    """Directed DOT (arrowheads) for Cayley digraph display."""
    lines = ["digraph G {"]
    for name in labels:
        lines.append(f"  {_dot_name(name)};")
    for u, v, gen in sorted(arcs):
        lines.append(
            f"  {_dot_name(labels[u])} -> {_dot_name(labels[v])} [label=\"{gen}\"];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


_PATH_COLORS = [
    "red", "blue", "green", "orange", "purple", "brown",
    "cadetblue", "magenta", "darkgreen", "navy", "olive", "teal",
]


def _fraction(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "value": float(x)}


def container_to_dict(c: Container) -> dict:
    return {
        "source": c.source,
        "target": c.target,
        "width": c.width,
        "length": c.length,
        "avg_length": _fraction(c.avg_length),
        "quality": _fraction(c.quality),
        "paths": [list(p) for p in c.paths],
    }


def verification_to_dict(v: VerificationReport) -> dict:
    return {
        "ok": v.ok,
        "violations": list(v.violations),
        "width": v.width,
        "length": v.length,
        "avg_length": _fraction(v.avg_length),
        "quality": _fraction(v.quality),
    }


def container_to_dot(c: Container) -> str:
    """DOT drawing of the container, one color per path index."""
    lines = ["graph container {"]
    seen = set()
    for pi, path in enumerate(c.paths):
        color = _PATH_COLORS[pi % len(_PATH_COLORS)]
        for name in path:
            if name not in seen:
                seen.add(name)
                lines.append(f"  {_dot_name(name)};")
        for a, b in zip(path, path[1:]):
            lines.append(f"  {_dot_name(a)} -- {_dot_name(b)} [color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
