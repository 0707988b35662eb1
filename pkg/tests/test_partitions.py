import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csfkit.errors import CapacityError, DomainError
from csfkit.partitions import (
    CongruenceKey,
    SetPartition,
    add_block,
    apply_transposition,
    bell_number,
    block_size_containing,
    coarsenings,
    coarsest,
    congruence_key,
    delete_top_element,
    finest,
    insert_into_block_of,
    is_refinement,
    meet,
    meet_is_finest,
    mobius,
    refinements,
    set_partitions,
    type_of,
)
from oracles import bell_triangle, mobius_by_recursion

P = SetPartition.from_string


@st.composite
def partitions_st(draw, max_d=7):
    d = draw(st.integers(min_value=1, max_value=max_d))
    rgs = [0]
    width = 1
    for _ in range(d - 1):
        b = draw(st.integers(min_value=0, max_value=width))
        rgs.append(b)
        width = max(width, b + 1)
    blocks = [[] for _ in range(width)]
    for el, b in enumerate(rgs, start=1):
        blocks[b].append(el)
    return SetPartition(d, blocks)


@st.composite
def _rgs_partition(draw, d):
    rgs = [0]
    width = 1
    for _ in range(d - 1):
        v = draw(st.integers(min_value=0, max_value=width))
        rgs.append(v)
        width = max(width, v + 1)
    blocks = [[] for _ in range(width)]
    for el, v in enumerate(rgs, start=1):
        blocks[v].append(el)
    return SetPartition(d, blocks)


def paired(base):
    """Two independently drawn partitions on the same ground set."""

    @st.composite
    def inner(draw):
        a = draw(base)
        return a, draw(_rgs_partition(a.d))

    return inner()


class TestCanonicalForm:
    def test_blocks_sorted(self):
        p = SetPartition(3, [[3, 1], [2]])
        assert p.blocks == ((1, 3), (2,))

    def test_equality_via_canonical_form(self):
        assert SetPartition(3, [[2], [1, 3]]) == P("13|2")

    def test_rejects_overlap(self):
        with pytest.raises(DomainError):
            SetPartition(3, [[1, 2], [2, 3]])

    def test_rejects_gap(self):
        with pytest.raises(DomainError):
            SetPartition(3, [[1, 2]])

    def test_string_roundtrip(self):
        for text in ["1", "13|2", "123", "1|2|3", "14|2|35"]:
            assert str(P(text)) == text

    def test_comma_form_beyond_nine(self):
        p = SetPartition(10, [[1, 10], [2, 3], [4], [5, 6, 7], [8], [9]])
        assert str(p) == "1,10|2,3|4|5,6,7|8|9"
        assert SetPartition.from_string(str(p)) == p


class TestEnumeration:
    def test_single_element(self):
        assert set_partitions(1) == (P("1"),)

    def test_three_elements_in_rgs_order(self):
        got = [str(p) for p in set_partitions(3)]
        assert got == ["123", "12|3", "13|2", "1|23", "1|2|3"]

    @pytest.mark.parametrize("d", range(1, 9))
    def test_counts_match_bell_triangle(self, d):
        assert len(set_partitions(d)) == bell_triangle(d)

    def test_bell_number_agrees(self):
        for d in range(9):
            assert bell_number(d) == bell_triangle(d)

    def test_capacity_error(self, monkeypatch):
        monkeypatch.setenv("CSFKIT_MAX_D", "4")
        with pytest.raises(CapacityError):
            set_partitions(5)
        monkeypatch.delenv("CSFKIT_MAX_D")
        assert len(set_partitions(5)) == 52

    def test_domain_error(self):
        with pytest.raises(DomainError):
            set_partitions(0)


class TestTypeAndBlocks:
    def test_type_examples(self):
        assert type_of(P("13|2")) == (2, 1)
        assert type_of(P("1|2|3")) == (1, 1, 1)
        assert type_of(P("123")) == (3,)

    def test_block_size_examples(self):
        assert block_size_containing(P("13|2"), 3) == 2
        assert block_size_containing(P("13|2"), 2) == 1
        assert block_size_containing(P("123"), 1) == 3

    def test_block_size_out_of_range(self):
        with pytest.raises(DomainError):
            block_size_containing(P("12"), 3)


class TestLattice:
    def test_meet_examples(self):
        assert meet(P("12|3"), P("13|2")) == P("1|2|3")
        assert meet(P("12|3"), P("12|3")) == P("12|3")
        assert meet(P("123"), P("1|2|3")) == P("1|2|3")

    def test_meet_mismatched_d(self):
        with pytest.raises(DomainError):
            meet(P("12"), P("123"))

    def test_refinement_examples(self):
        assert is_refinement(P("1|2|3"), P("123"))
        assert not is_refinement(P("12|3"), P("13|2"))
        assert is_refinement(P("12|3"), P("12|3"))

    @settings(max_examples=150, deadline=None)
    @given(paired(partitions_st()))
    def test_meet_commutative_and_bounded(self, pair):
        a, b = pair
        m = meet(a, b)
        assert m == meet(b, a)
        assert is_refinement(m, a) and is_refinement(m, b)
        assert meet(a, a) == a

    @settings(max_examples=150, deadline=None)
    @given(paired(partitions_st()))
    def test_refinement_iff_meet_fixes(self, pair):
        a, b = pair
        assert is_refinement(a, b) == (meet(a, b) == a)
        assert meet_is_finest(a, b) == (meet(a, b) == finest(a.d))

    @settings(max_examples=60, deadline=None)
    @given(paired(partitions_st(max_d=6)), partitions_st(max_d=6))
    def test_meet_associative(self, pair, c):
        a, b = pair
        if c.d != a.d:
            return
        assert meet(meet(a, b), c) == meet(a, meet(b, c))


class TestMobius:
    def test_trivial_interval(self):
        p = P("13|2")
        assert mobius(p, p) == 1

    def test_small_values_match_recursion(self):
        assert mobius(finest(3), coarsest(3)) == 2
        assert mobius(finest(2), coarsest(2)) == -1
        assert mobius(finest(3), coarsest(3)) == mobius_by_recursion(finest(3), coarsest(3))

    def test_requires_refinement(self):
        with pytest.raises(DomainError):
            mobius(P("12|3"), P("13|2"))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_interval_sums_vanish(self, d):
        # sum over the interval [a, b] is 0 unless a == b
        univ = set_partitions(d)
        for a in univ:
            for b in univ:
                if not is_refinement(a, b):
                    continue
                total = sum(
                    mobius(a, t) for t in univ if is_refinement(a, t) and is_refinement(t, b)
                )
                assert total == (1 if a == b else 0)

    def test_top_interval_d6(self):
        assert mobius(finest(6), coarsest(6)) == -120


class TestSurgeries:
    def test_add_block_examples(self):
        assert add_block(P("12"), [3]) == P("12|3")
        assert add_block(P("12"), [3, 4]) == P("12|34")
        assert add_block(P("1|2"), [3]) == P("1|2|3")

    def test_add_block_rejects_non_contiguous(self):
        with pytest.raises(DomainError):
            add_block(P("12"), [4])
        with pytest.raises(DomainError):
            add_block(P("12"), [2])

    def test_insert_examples(self):
        assert insert_into_block_of(P("12"), 2) == P("123")
        assert insert_into_block_of(P("1|2"), 1) == P("13|2")
        assert insert_into_block_of(P("13|2"), 2) == P("13|24")

    def test_insert_out_of_range(self):
        with pytest.raises(DomainError):
            insert_into_block_of(P("12"), 3)

    @settings(max_examples=100, deadline=None)
    @given(partitions_st(), st.integers(min_value=1, max_value=7))
    def test_insert_then_delete_roundtrip(self, p, i):
        if i > p.d:
            return
        assert delete_top_element(insert_into_block_of(p, i)) == p

    def test_transposition_examples(self):
        assert apply_transposition(P("13|2"), 3, 2) == P("12|3")
        assert apply_transposition(P("13|2"), 1, 1) == P("13|2")
        assert apply_transposition(P("123"), 3, 1) == P("123")

    @settings(max_examples=100, deadline=None)
    @given(partitions_st(), st.integers(1, 7), st.integers(1, 7))
    def test_transposition_involution(self, p, a, b):
        if a > p.d or b > p.d:
            return
        assert apply_transposition(apply_transposition(p, a, b), a, b) == p


class TestCongruenceKeys:
    def test_examples(self):
        assert congruence_key(P("13|2"), 3) == CongruenceKey((2, 1), 2)
        assert congruence_key(P("1|23"), 3) == CongruenceKey((2, 1), 2)
        assert congruence_key(P("12|3"), 3) == CongruenceKey((2, 1), 1)

    @settings(max_examples=100, deadline=None)
    @given(partitions_st(), st.integers(1, 7), st.integers(1, 7), st.integers(1, 7))
    def test_invariant_under_transpositions_avoiding_anchor(self, p, i, a, b):
        if max(i, a, b) > p.d or i in (a, b):
            return
        assert congruence_key(apply_transposition(p, a, b), i) == congruence_key(p, i)


class TestRefinementsCoarsenings:
    @pytest.mark.parametrize("text", ["123", "12|3", "1|2|3", "12|34", "134|2|5"])
    def test_against_full_scan(self, text):
        p = P(text)
        univ = set_partitions(p.d)
        assert sorted(map(str, refinements(p))) == sorted(
            str(t) for t in univ if is_refinement(t, p)
        )
        assert sorted(map(str, coarsenings(p))) == sorted(
            str(t) for t in univ if is_refinement(p, t)
        )
