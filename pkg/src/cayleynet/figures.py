"""Matplotlib renderings written next to the JSON/CSV reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .containers import Container
from .graphs import Graph
from .metrics import distance_layers


def save_degree_histogram(g: Graph, path: Path) -> Path:
    degrees = [g.degree(v) for v in range(g.n)]
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    fig, ax = plt.subplots(figsize=(5, 3.2))
    xs = sorted(counts)
    ax.bar(xs, [counts[x] for x in xs], color="#4878a8")
    ax.set_xlabel("degree")
    ax.set_ylabel("vertices")
    ax.set_title("Degree distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_layer_profile(g: Graph, source: int, path: Path) -> Path:
    partition = distance_layers(g, source)
    sizes = [len(layer) for layer in partition.layers]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar(range(len(sizes)), sizes, color="#76a868")
    ax.set_xlabel(f"distance from vertex {g.name_of(source)}")
    ax.set_ylabel("layer size")
    ax.set_title("Distance partition")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_adjacency_matrix(g: Graph, path: Path) -> Path:
    grid = [[1 if w in g.adj[v] else 0 for w in range(g.n)] for v in range(g.n)]
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    ax.imshow(grid, cmap="Greys", interpolation="nearest")
    ax.set_title("Adjacency matrix")
    ax.set_xticks([])
    ax.set_yticks([])
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_container_lengths(c: Container, path: Path) -> Path:
    lengths = [len(p) - 1 for p in c.paths]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar(range(len(lengths)), lengths, color="#a86868")
    ax.set_xlabel("path index")
    ax.set_ylabel("length")
    ax.set_title(f"Container {c.source} to {c.target} (width {c.width})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_graph_figures(g: Graph, outdir: Path) -> list[str]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [
        save_degree_histogram(g, outdir / "degree_histogram.png"),
        save_layer_profile(g, 0, outdir / "distance_layers.png"),
    ]
    if g.n <= 256:
        written.append(save_adjacency_matrix(g, outdir / "adjacency.png"))
    return [str(p) for p in written]
