"""Command-line surface: build, analyze, container, compare, moore, check.

Exit codes: 0 ok, 2 usage error, 3 guard exceeded, 4 unknown verdict,
5 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import connectivity as conn
from . import containers as cont
from . import families, metrics, serialize, symmetry, transpositions
from .codes import cayley_from_matrix, parse_matrix
from .errors import GuardExceeded, UnsupportedInput
from .graphs import Graph, cayley_graph
from .groups import (
    BinaryGroup,
    CyclicProduct,
    GeneratingSet,
    SymmetricGroup,
    parse_element,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_UNKNOWN = 4
EXIT_VERIFY = 5

_METRIC_NAMES = [
    "kappa", "lambda", "diameter", "girth", "bipartite",
    "aut", "transitivity", "normality", "atoms", "moore-gap",
]


class _UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    return [int(p) for p in text.replace(",", " ").split()]


def _load_graph(path: str) -> Graph:
    try:
        return serialize.graph_from_json(Path(path).read_text())
    except (OSError, ValueError, KeyError) as exc:
        raise _UsageError(f"cannot read graph {path}: {exc}") from exc


def _parse_group_spec(text: str):
    kind, _, arg = text.partition(":")
    if kind == "sym":
        return SymmetricGroup(int(arg))
    if kind == "binary":
        return BinaryGroup(int(arg))
    if kind == "cyclic":
        return CyclicProduct(tuple(_int_list(arg)))
    raise _UsageError(f"unknown group spec {text!r}; use sym:N, binary:R or cyclic:M1,M2,...")


# ---------------------------------------------------------------------------
# build

def _family_params(args) -> dict:
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.k is not None:
        params["k"] = args.k
    if args.a is not None:
        params["a"] = args.a
    if args.b is not None:
        params["b"] = args.b
    if args.jumps is not None:
        params["jumps"] = _int_list(args.jumps)
    if args.moduli is not None:
        params["moduli"] = _int_list(args.moduli)
    if args.dims is not None:
        params["dims"] = _int_list(args.dims)
    return params


def cmd_build(args) -> int:
    sources = [
        args.family is not None,
        args.from_matrix is not None,
        args.from_transpositions is not None,
        args.cayley,
    ]
    if sum(bool(s) for s in sources) != 1:
        raise _UsageError(
            "exactly one of --family/--from-matrix/--from-transpositions/--cayley"
        )
    if args.family:
        g = families.build_family(args.family, **_family_params(args))
    elif args.from_matrix:
        g = cayley_from_matrix(parse_matrix(Path(args.from_matrix).read_text()))
    elif args.from_transpositions:
        ts = transpositions.parse_transposition_file(
            Path(args.from_transpositions).read_text()
        )
        g = transpositions.cayley_of(ts)
    else:
        spec = _parse_group_spec(args.group)
        gens = tuple(
            parse_element(t.strip(), spec) for t in args.gens.split(";") if t.strip()
        )
        g = cayley_graph(GeneratingSet(spec, gens))
    Path(args.output).write_text(serialize.graph_to_json(g))
    if args.dot:
        Path(args.dot).write_text(serialize.graph_to_dot(g))
    print(f"{g.n} vertices, {g.edge_count()} edges -> {args.output}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze

def _metrics_block(g: Graph) -> dict:
    delta, big_delta, regular = metrics.degree_stats(g)
    block = {
        "vertices": g.n,
        "edges": g.edge_count(),
        "min_degree": delta,
        "max_degree": big_delta,
        "regular": regular,
        "connected": metrics.is_connected(g),
    }
    return block


def _run_analyses(g: Graph, wanted: list[str], timing: bool) -> dict:
    report: dict = {
        "graph": {
            "digest": serialize.graph_digest(g),
            "family_meta": g.family_meta,
        },
        "metrics": _metrics_block(g),
        "warnings": [],
    }
    timings: dict[str, float] = {}

    def run(name: str, fn):
        start = time.perf_counter()
        try:
            result = fn()
        except GuardExceeded as exc:
            report["warnings"].append(f"{name} skipped: {exc}")
            result = {"skipped": str(exc)}
        except UnsupportedInput as exc:
            report["warnings"].append(f"{name} skipped: {exc}")
            result = {"skipped": str(exc)}
        timings[name] = round(time.perf_counter() - start, 6)
        return result

    aut_cache: dict[str, symmetry.AutGroup] = {}

    def aut_group():
        if "aut" not in aut_cache:
            aut_cache["aut"] = symmetry.automorphism_group(g)
        return aut_cache["aut"]

    for name in wanted:
        if name == "kappa":
            def _kappa():
                value, cert = conn.vertex_connectivity(g)
                return {
                    "kappa": value,
                    "fault_tolerance": value - 1,
                    "certificate": list(cert) if isinstance(cert, tuple) else cert,
                }
            report.setdefault("connectivity", {}).update(run(name, _kappa))
        elif name == "lambda":
            def _lambda():
                value, cut = conn.edge_connectivity(g)
                return {"lambda": value, "min_edge_cut": [list(e) for e in cut]}
            report.setdefault("connectivity", {}).update(run(name, _lambda))
        elif name == "atoms":
            def _atoms():
                atom_list = conn.atoms(g)
                return {
                    "atoms": [
                        {"vertices": list(a.vertices), "separator": list(a.separator)}
                        for a in atom_list
                    ],
                    "p": len(atom_list[0].vertices),
                }
            report.setdefault("connectivity", {}).update(run(name, _atoms))
        elif name == "diameter":
            def _diameter():
                if g.n > 50_000:
                    return {
                        "diameter_lower_bound": metrics.estimate_diameter(g),
                        "exact": False,
                    }
                return {"diameter": metrics.diameter(g), "exact": True}
            report["metrics"].update(run(name, _diameter))
        elif name == "girth":
            def _girth():
                value = metrics.girth(g)
                return {"girth": None if value == metrics.INFINITE else value}
            report["metrics"].update(run(name, _girth))
        elif name == "bipartite":
            def _bipartite():
                res = metrics.is_bipartite(g)
                out = {"bipartite": res.bipartite}
                if res.odd_cycle:
                    out["odd_cycle"] = list(res.odd_cycle)
                return out
            report["metrics"].update(run(name, _bipartite))
        elif name == "moore-gap":
            def _moore():
                diam = metrics.diameter(g)
                _, big_delta, _ = metrics.degree_stats(g)
                bound = metrics.moore_bound(big_delta, diam)
                return {
                    "moore_bound": bound,
                    "fill_ratio": float(Fraction(g.n, bound)),
                }
            report["metrics"].update(run(name, _moore))
        elif name == "aut":
            def _aut():
                group = aut_group()
                return {
                    "aut_order": group.order,
                    "generators": [list(p) for p in group.generators],
                }
            report.setdefault("symmetry", {}).update(run(name, _aut))
        elif name == "transitivity":
            def _trans():
                rep = symmetry.transitivity_report(g, aut=aut_group())
                return {
                    "vertex_transitive": rep.vertex_transitive,
                    "edge_transitive": rep.edge_transitive,
                    "arc_transitive": rep.arc_transitive,
                    "distance_transitive": rep.distance_transitive,
                    "k_arc_transitive_max": rep.k_arc_transitive_max,
                    "vertex_orbit_count": rep.vertex_orbit_count,
                    "edge_orbit_count": rep.edge_orbit_count,
                }
            report.setdefault("symmetry", {}).update(run(name, _trans))
        elif name == "normality":
            def _normality():
                verdict = symmetry.normality_verdict(g, aut=aut_group())
                return {
                    "normal": verdict.normal,
                    "grr": verdict.grr,
                    "aut_order": verdict.aut_order,
                    "predicted_order": verdict.predicted_order,
                }
            report.setdefault("symmetry", {}).update(run(name, _normality))
        else:
            raise _UsageError(f"unknown metric {name!r}; known: {', '.join(_METRIC_NAMES)}")
    if timing:
        report["timing"] = timings
    return report


def _flatten(prefix: str, value, rows: list[tuple[str, str]]):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else key, value[key], rows)
    elif isinstance(value, list):
        rows.append((prefix, json.dumps(value)))
    else:
        rows.append((prefix, json.dumps(value)))


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    wanted = [m.strip() for m in args.metrics.split(",") if m.strip()] if args.metrics else []
    for m in wanted:
        if m not in _METRIC_NAMES:
            raise _UsageError(f"unknown metric {m!r}; known: {', '.join(_METRIC_NAMES)}")
    report = _run_analyses(g, wanted, timing=not args.no_timing)
    if args.figures:
        from . import figures

        report["figures"] = figures.render_graph_figures(g, Path(args.figures))
    text = serialize.dumps(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        rows: list[tuple[str, str]] = []
        _flatten("", {k: v for k, v in report.items() if k != "figures"}, rows)
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["metric", "value"])
            writer.writerows(rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# container

def cmd_container(args) -> int:
    if args.family == "hypercube":
        c = cont.hypercube_container(args.n, args.src, args.dst)
        g = families.hypercube(args.n)
    elif args.family == "folded":
        c = cont.folded_container(args.n, args.src, args.dst)
        g = families.folded_hypercube(args.n)
    else:
        raise _UsageError("container family must be hypercube or folded")
    verification = cont.verify_container(g, c)
    out = {
        "container": serialize.container_to_dict(c),
        "verification": serialize.verification_to_dict(verification),
    }
    text = serialize.dumps(out)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.dot:
        Path(args.dot).write_text(serialize.container_to_dot(c))
    if args.figures:
        from . import figures

        outdir = Path(args.figures)
        outdir.mkdir(parents=True, exist_ok=True)
        figures.save_container_lengths(c, outdir / "container_lengths.png")
    if not verification.ok:
        print("container verification FAILED", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


# ---------------------------------------------------------------------------
# compare

def cmd_compare(args) -> int:
    a = _load_graph(args.graph_a)
    b = _load_graph(args.graph_b)
    try:
        mapping = symmetry.graph_isomorphic(a, b)
    except GuardExceeded as exc:
        sys.stdout.write(serialize.dumps({"verdict": "unknown", "reason": str(exc)}))
        return EXIT_UNKNOWN
    verdict = {"verdict": "isomorphic" if mapping else "not_isomorphic"}
    sys.stdout.write(serialize.dumps(verdict))
    if mapping and args.mapping_out:
        Path(args.mapping_out).write_text(serialize.dumps(list(mapping)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# moore

def cmd_moore(args) -> int:
    bound = metrics.moore_bound(args.delta, args.diameter)
    if args.graph:
        g = _load_graph(args.graph)
        ratio = g.n / bound
        print(f"delta={args.delta}\tdiameter={args.diameter}\tbound={bound}\t"
              f"n={g.n}\tfill={ratio:.6f}")
    else:
        print(f"delta={args.delta}\tdiameter={args.diameter}\tbound={bound}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# check (bundled property suites on random inputs)

def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def cmd_check(args) -> int:
    rng = random.Random(args.seed)
    failures = 0
    if args.suite == "whitney":
        for _ in range(args.count):
            n = rng.randint(2, 9)
            g = _random_graph(rng, n, rng.uniform(0.2, 0.9))
            kappa, _ = conn.vertex_connectivity(g)
            lam, _ = conn.edge_connectivity(g)
            delta, _, _ = metrics.degree_stats(g)
            if not kappa <= lam <= delta:
                failures += 1
    elif args.suite == "menger":
        for _ in range(args.count):
            n = rng.randint(4, 9)
            g = _random_graph(rng, n, rng.uniform(0.3, 0.8))
            if not metrics.is_connected(g):
                continue
            for s in range(n):
                for t in range(s + 1, n):
                    if g.has_edge(s, t):
                        continue
                    flow = conn.max_independent_paths(g, s, t).width
                    sep = _brute_min_separator(g, s, t)
                    if flow != sep:
                        failures += 1
    else:
        raise _UsageError("suite must be whitney or menger")
    print(f"{args.suite}: {args.count} cases, {failures} violations (seed {args.seed})")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


def _brute_min_separator(g: Graph, s: int, t: int) -> int:
    import itertools

    others = [v for v in range(g.n) if v not in (s, t)]
    for k in range(len(others) + 1):
        for removed in itertools.combinations(others, k):
            blocked = set(removed)
            stack, seen = [s], {s}
            reached = False
            while stack:
                u = stack.pop()
                if u == t:
                    reached = True
                    break
                for w in g.adj[u]:
                    if w not in blocked and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if not reached:
                return k
    return len(others) + 1


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleynet",
        description="Cayley-graph interconnection topologies: build and analyze",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a graph and write its JSON")
    p.add_argument("--family", choices=families.FAMILY_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--jumps")
    p.add_argument("--moduli")
    p.add_argument("--dims")
    p.add_argument("--from-matrix")
    p.add_argument("--from-transpositions")
    p.add_argument("--cayley", action="store_true",
                   help="build from --group and --gens")
    p.add_argument("--group", help="sym:N | binary:R | cyclic:M1,M2,...")
    p.add_argument("--gens", help="semicolon-separated generator list")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--dot", help="also write a DOT rendering")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="run analyses and write a JSON report")
    p.add_argument("graph")
    p.add_argument("--metrics", default="",
                   help=f"comma list from: {', '.join(_METRIC_NAMES)}")
    p.add_argument("-o", "--output")
    p.add_argument("--no-timing", action="store_true",
                   help="omit timing for byte-identical golden output")
    p.add_argument("--figures", help="directory for matplotlib figures")
    p.add_argument("--csv", help="write a flat metric,value CSV summary")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("container", help="construct and verify a parallel-path container")
    p.add_argument("--family", required=True, choices=["hypercube", "folded"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--src", required=True)
    p.add_argument("--dst", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--dot")
    p.add_argument("--figures")
    p.set_defaults(func=cmd_container)

    p = sub.add_parser("compare", help="isomorphism verdict for two graph files")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.add_argument("--isomorphism", action="store_true", default=True)
    p.add_argument("--mapping-out")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("moore", help="Moore bound table row")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--graph", help="graph file for the fill ratio")
    p.set_defaults(func=cmd_moore)

    p = sub.add_parser("check", help="randomized property suites")
    p.add_argument("--suite", required=True, choices=["whitney", "menger"])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
