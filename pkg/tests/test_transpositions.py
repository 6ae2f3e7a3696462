import math

import pytest

from cayleynet.families import build_family
from cayleynet.groups import GeneratingSet, SymmetricGroup, closure, parse_element
from cayleynet.symmetry import graph_isomorphic
from cayleynet.transpositions import (
    TranspositionSet,
    cayley_of,
    classify,
    format_transposition_file,
    parse_transposition_file,
    transposition_graph,
)

ALL_P4 = TranspositionSet(4, ((1, 2), (2, 3), (3, 4)))
STAR4 = TranspositionSet(4, ((1, 2), (1, 3), (1, 4)))
K4 = TranspositionSet(4, tuple((i, j) for i in range(1, 5) for j in range(i + 1, 5)))
C4 = TranspositionSet(4, ((1, 2), (2, 3), (3, 4), (1, 4)))


class TestTranspositionSet:
    def test_validation(self):
        with pytest.raises(ValueError):
            TranspositionSet(4, ((2, 2),))
        with pytest.raises(ValueError):
            TranspositionSet(4, ((1, 5),))
        with pytest.raises(ValueError):
            TranspositionSet(4, ((1, 2), (1, 2)))

    def test_pairs_sorted(self):
        ts = TranspositionSet(4, ((3, 4), (1, 2)))
        assert ts.pairs == ((1, 2), (3, 4))


class TestTranspositionGraph:
    def test_complete(self):
        g = transposition_graph(K4)
        assert graph_isomorphic(g, build_family("complete", n=4)) is not None

    def test_star(self):
        g = transposition_graph(STAR4)
        assert graph_isomorphic(g, build_family("complete_bipartite", a=1, b=3))

    def test_path(self):
        g = transposition_graph(ALL_P4)
        assert graph_isomorphic(g, build_family("path", n=4)) is not None


class TestClassify:
    def test_star_k13(self):
        rep = classify(STAR4)
        assert rep.generates_sn and rep.minimal
        assert rep.family == "star"
        assert rep.predicted_edge_transitive
        assert rep.aut_t_order == 6
        assert rep.predicted_aut_order == 24 * 6

    def test_path_p4(self):
        rep = classify(ALL_P4)
        assert rep.generates_sn and rep.minimal
        assert rep.family == "bubble_sort"
        assert not rep.predicted_edge_transitive  # Aut(P4) has two edge orbits
        assert rep.aut_t_order == 2
        assert rep.predicted_aut_order == 48

    def test_disconnected(self):
        rep = classify(TranspositionSet(4, ((1, 2), (3, 4))))
        assert not rep.generates_sn
        assert not rep.minimal

    def test_cycle_no_prediction(self):
        rep = classify(C4)
        assert rep.generates_sn and not rep.minimal
        assert rep.family == "modified_bubble_sort"
        assert rep.predicted_edge_transitive  # C4 is edge-transitive
        assert rep.predicted_aut_order is None  # girth 4, no theorem applies

    def test_complete_no_prediction(self):
        rep = classify(K4)
        assert rep.family == "complete_transposition"
        assert rep.predicted_edge_transitive
        assert rep.predicted_aut_order is None

    def test_girth5_prediction(self):
        c5 = TranspositionSet(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))
        rep = classify(c5)
        assert rep.family == "modified_bubble_sort"
        assert rep.predicted_aut_order == math.factorial(5) * 10  # Aut(C5) = D10

    def test_generalized_star(self):
        ts = TranspositionSet(5, tuple(
            (i, j) for i in (1, 2) for j in (3, 4, 5)
        ))
        rep = classify(ts)
        assert rep.family == "generalized_star"

    def test_general_shape(self):
        # a paw: triangle plus pendant
        ts = TranspositionSet(4, ((1, 2), (2, 3), (1, 3), (3, 4)))
        assert classify(ts).family == "general"


class TestGenerationOracle:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_generates_iff_closure_full(self, n):
        import itertools
        import random

        rng = random.Random(n)
        all_pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        for _ in range(12):
            k = rng.randint(1, len(all_pairs))
            pairs = tuple(sorted(rng.sample(all_pairs, k)))
            ts = TranspositionSet(n, pairs)
            spec = SymmetricGroup(n)
            gens = tuple(
                parse_element(f"({i},{j})", spec) for i, j in pairs
            )
            order = len(closure(GeneratingSet(spec, gens)))
            assert classify(ts).generates_sn == (order == math.factorial(n))


class TestFileFormat:
    def test_round_trip(self):
        text = format_transposition_file(C4)
        assert parse_transposition_file(text) == C4

    def test_comments_and_blanks(self):
        text = "# modified bubble sort\n4\n1 2\n2 3  # middle\n\n3 4\n1 4\n"
        assert parse_transposition_file(text) == C4

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            parse_transposition_file("# nothing\n")

    def test_bad_line(self):
        with pytest.raises(ValueError):
            parse_transposition_file("4\n1 2 3\n")


def test_cayley_of_matches_family():
    g = cayley_of(C4)
    mb = build_family("modified_bubble_sort", n=4)
    assert graph_isomorphic(g, mb) is not None
