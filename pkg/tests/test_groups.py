import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleynet.errors import GuardExceeded
from cayleynet.groups import (
    BinaryGroup,
    CyclicProduct,
    GeneratingSet,
    Perm,
    PermSubgroup,
    ResidueTuple,
    SymmetricGroup,
    Word,
    closure,
    compose,
    element_key,
    format_element,
    group_order,
    identity_of,
    inverse,
    is_identity,
    parse_element,
    spec_from_dict,
    spec_to_dict,
    validate_generating_set,
)

S3 = SymmetricGroup(3)
S4 = SymmetricGroup(4)
S6 = SymmetricGroup(6)


def perm(text, spec=S3):
    return parse_element(text, spec)


class TestCompose:
    def test_three_cycle_times_transposition(self):
        # the worked product (123)(12) = (23)
        assert compose(perm("(1,2,3)"), perm("(1,2)")) == perm("(2,3)")

    def test_identity_left_and_right(self):
        g = perm("(1,3)")
        e = identity_of(S3)
        assert compose(e, g) == g
        assert compose(g, e) == g

    def test_word_xor(self):
        a = parse_element("0110", BinaryGroup(4))
        b = parse_element("1100", BinaryGroup(4))
        assert format_element(compose(a, b)) == "1010"

    def test_tuple_addition(self):
        spec = CyclicProduct((4, 5))
        a = parse_element("2,3", spec)
        b = parse_element("3,4", spec)
        assert format_element(compose(a, b)) == "1,2"

    def test_variant_mismatch(self):
        with pytest.raises(ValueError):
            compose(perm("(1,2)"), parse_element("010", BinaryGroup(3)))

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(perm("(1,2)"), perm("(1,2)", S4))


class TestInverse:
    def test_three_cycle(self):
        assert inverse(perm("(1,2,3)")) == perm("(1,3,2)")

    def test_involution(self):
        assert inverse(perm("(1,2)")) == perm("(1,2)")

    def test_tuple_negation(self):
        el = parse_element("2,3", CyclicProduct((4, 5)))
        assert format_element(inverse(el)) == "2,2"

    def test_word_self_inverse(self):
        w = parse_element("0110", BinaryGroup(4))
        assert inverse(w) == w


class TestParseFormat:
    def test_three_cycle(self):
        assert perm("(1,2,3)") == Perm((1, 2, 0))

    def test_word(self):
        assert parse_element("011111", BinaryGroup(6)) == Word((0, 1, 1, 1, 1, 1))

    def test_composite_disjoint(self):
        p = parse_element("(1,2)(3,4)(5,6,7)", SymmetricGroup(7))
        assert format_element(p) == "(1,2)(3,4)(5,6,7)"

    def test_identity_forms(self):
        assert is_identity(perm("e"))
        assert is_identity(perm("()"))
        assert format_element(identity_of(S3)) == "e"

    @pytest.mark.parametrize("bad", ["(1,2", "(0,1)", "(1,1)", "(1,4)", "x"])
    def test_malformed_perm(self, bad):
        with pytest.raises(ValueError):
            perm(bad)

    @pytest.mark.parametrize("bad", ["012", "01x0", "0101"])
    def test_malformed_word(self, bad):
        with pytest.raises(ValueError):
            parse_element(bad, BinaryGroup(3))

    def test_tuple_range(self):
        with pytest.raises(ValueError):
            parse_element("4,0", CyclicProduct((4, 5)))

    def test_spec_dict_round_trip(self):
        for spec in [S4, BinaryGroup(5), CyclicProduct((4, 5)),
                     PermSubgroup(4, (perm("(1,2)", S4),))]:
            assert spec_from_dict(spec_to_dict(spec)) == spec


class TestValidateGeneratingSet:
    def test_star_generators_all_true(self):
        gens = tuple(perm(f"(1,{i})", S4) for i in (2, 3, 4))
        report = validate_generating_set(GeneratingSet(S4, gens))
        assert report.identity_free and report.symmetric and report.generates

    def test_asymmetric_set(self):
        report = validate_generating_set(GeneratingSet(S3, (perm("(1,2,3)"),)))
        assert not report.symmetric

    def test_non_generating_in_s6(self):
        gens = tuple(perm(t, S6) for t in ["(1,2)", "(3,4)", "(5,6)"])
        report = validate_generating_set(GeneratingSet(S6, gens))
        assert not report.generates
        assert report.closure_order == 8

    def test_identity_in_set(self):
        report = validate_generating_set(GeneratingSet(S3, (perm("e"), perm("(1,2)"))))
        assert not report.identity_free

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            GeneratingSet(S3, (perm("(1,2)"), perm("(1,2)")))

    def test_incompatible_rejected(self):
        with pytest.raises(ValueError):
            GeneratingSet(S3, (perm("(1,2)", S4),))

    def test_perm_subgroup_generates_by_definition(self):
        gens = (perm("(1,2)", S4),)
        report = validate_generating_set(GeneratingSet(PermSubgroup(4, gens), gens))
        assert report.generates


class TestClosure:
    def test_disjoint_transpositions_give_z2_cubed(self):
        gens = tuple(perm(t, S6) for t in ["(1,2)", "(3,4)", "(5,6)"])
        assert len(closure(GeneratingSet(S6, gens))) == 8

    def test_adjacent_transpositions_give_s3(self):
        gens = (perm("(1,2)"), perm("(2,3)"))
        assert len(closure(GeneratingSet(S3, gens))) == 6

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            closure(GeneratingSet(S3, ()))

    def test_guard(self):
        gens = tuple(perm(f"(1,{i})", S6) for i in range(2, 7))
        with pytest.raises(GuardExceeded):
            closure(GeneratingSet(S6, gens), guard=100)

    def test_identity_first_and_deterministic(self):
        gens = (perm("(1,2)"), perm("(2,3)"))
        out = closure(GeneratingSet(S3, gens))
        assert is_identity(out[0])
        assert out == closure(GeneratingSet(S3, gens))

    def test_closed_under_compose_and_inverse(self):
        gens = tuple(perm(t, S4) for t in ["(1,2)", "(2,3)", "(3,4)"])
        out = closure(GeneratingSet(S4, gens))
        keys = {element_key(el) for el in out}
        assert len(out) == 24
        for a in out:
            assert element_key(inverse(a)) in keys
            for b in out:
                assert element_key(compose(a, b)) in keys

    def test_lagrange(self):
        # |<S>| divides |H| for a non-generating S
        gens = tuple(perm(t, S6) for t in ["(1,2)", "(3,4)"])
        order = len(closure(GeneratingSet(S6, gens)))
        assert group_order(S6) % order == 0


# random-sample law checks

perms5 = st.permutations(range(5)).map(lambda p: Perm(tuple(p)))
words6 = st.tuples(*[st.integers(0, 1)] * 6).map(Word)
tuples45 = st.tuples(st.integers(0, 3), st.integers(0, 4)).map(
    lambda v: ResidueTuple(v, (4, 5))
)


@settings(max_examples=150)
@given(st.one_of(
    st.tuples(perms5, perms5, perms5),
    st.tuples(words6, words6, words6),
    st.tuples(tuples45, tuples45, tuples45),
))
def test_associativity(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=150)
@given(st.one_of(perms5, words6, tuples45))
def test_identity_and_inverse_laws(el):
    if isinstance(el, Perm):
        ident = identity_of(SymmetricGroup(5))
    elif isinstance(el, Word):
        ident = identity_of(BinaryGroup(6))
    else:
        ident = identity_of(CyclicProduct((4, 5)))
    assert compose(el, ident) == el
    assert compose(ident, el) == el
    assert compose(el, inverse(el)) == ident
    assert compose(inverse(el), el) == ident


@settings(max_examples=80)
@given(perms5)
def test_format_parse_round_trip(p):
    assert parse_element(format_element(p), SymmetricGroup(5)) == p
