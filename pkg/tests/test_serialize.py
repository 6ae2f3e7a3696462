import json

from cayleynet.containers import hypercube_container, verify_container
from cayleynet.families import build_family
from cayleynet.serialize import (
    container_to_dict,
    container_to_dot,
    digraph_to_dot,
    dumps,
    graph_digest,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    verification_to_dict,
)


class TestGraphJson:
    def test_round_trip_preserves_everything(self):
        g = build_family("folded", n=4)
        back = graph_from_json(graph_to_json(g))
        assert back.adj == g.adj
        assert back.vertex_labels == g.vertex_labels
        assert back.edge_labels == g.edge_labels
        assert back.family_meta == g.family_meta

    def test_byte_identical_rebuild(self):
        a = graph_to_json(build_family("star", n=4))
        b = graph_to_json(build_family("star", n=4))
        assert a == b

    def test_format_marker(self):
        data = json.loads(graph_to_json(build_family("petersen")))
        assert data["format"] == "cayley-net/1"
        assert data["n"] == 10
        assert data["edges"] == sorted(data["edges"])

    def test_unlabeled_graph(self):
        g = build_family("mesh", dims=[2, 3])
        back = graph_from_json(graph_to_json(g))
        assert back.adj == g.adj
        assert back.vertex_labels is None

    def test_digest_stable_and_label_independent(self):
        g = build_family("hypercube", n=3)
        assert graph_digest(g) == graph_digest(graph_from_json(graph_to_json(g)))

    def test_rejects_unknown_format(self):
        import pytest

        with pytest.raises(ValueError):
            graph_from_json('{"format": "other", "n": 1, "edges": []}')


class TestDot:
    def test_edges_sorted_and_labeled(self):
        g = build_family("hypercube", n=2)
        dot = graph_to_dot(g)
        assert dot.startswith("graph G {")
        assert '"00" -- "01"' in dot
        assert "label=" in dot

    def test_plain_graph_uses_indices(self):
        dot = graph_to_dot(build_family("mesh", dims=[2, 2]))
        assert '"0" -- "1"' in dot

    def test_digraph_arrowheads(self):
        from cayleynet.graphs import cayley_digraph_arcs
        from cayleynet.groups import GeneratingSet, SymmetricGroup, parse_element

        spec = SymmetricGroup(3)
        labels, arcs = cayley_digraph_arcs(
            GeneratingSet(spec, (parse_element("(1,2,3)", spec),))
        )
        dot = digraph_to_dot(labels, arcs)
        assert dot.startswith("digraph")
        assert "->" in dot


class TestContainerSerialization:
    def test_dict_shape(self):
        c = hypercube_container(4, "0000", "0111")
        d = container_to_dict(c)
        assert d["width"] == 4
        assert d["quality"]["num"] * 1.0 / d["quality"]["den"] == float(c.quality)
        assert len(d["paths"]) == 4

    def test_verification_dict(self):
        g = build_family("hypercube", n=4)
        c = hypercube_container(4, "0000", "0111")
        v = verification_to_dict(verify_container(g, c))
        assert v["ok"] is True
        assert v["violations"] == []

    def test_dot_colors_paths(self):
        c = hypercube_container(3, "000", "111")
        dot = container_to_dot(c)
        assert "color=red" in dot and "color=blue" in dot

    def test_dumps_stable(self):
        assert dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'
