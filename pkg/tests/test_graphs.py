import json

import pytest

from csfkit.errors import DomainError
from csfkit.graphs import (
    LabeledGraph,
    are_isomorphic,
    cc_m3_labeled,
    chromatic_polynomial_value,
    claw,
    clique_attach,
    complete,
    component_partition,
    contract_edge,
    corpus,
    cycle,
    cycle_chord,
    delete_edge,
    diamond,
    disjoint_union,
    empty_graph,
    line_tadpole,
    parse_graph,
    path,
    relabel,
    tadpole,
)
from csfkit.partitions import SetPartition, is_refinement
from oracles import count_colorings_direct

P = SetPartition.from_string


def edges(g):
    return set(g.edge_list)


class TestConstructors:
    def test_path(self):
        assert edges(path(3)) == {(1, 2), (2, 3)}
        assert path(0).d == 0 and not path(0).edges
        assert path(1).d == 1

    def test_cycle(self):
        assert edges(cycle(3)) == {(1, 2), (2, 3), (1, 3)}
        with pytest.raises(DomainError):
            cycle(2)

    def test_complete(self):
        assert len(complete(4).edges) == 6

    def test_tadpole(self):
        assert edges(tadpole(3, 1)) == {(1, 2), (2, 3), (1, 3), (3, 4)}
        assert tadpole(4, 0) == cycle(4)
        g = tadpole(3, 2)
        assert g.d == 5 and len(g.edges) == 5

    def test_line_tadpole(self):
        assert edges(line_tadpole(3, 1)) == {(1, 2), (2, 3), (1, 3), (1, 4), (3, 4)}
        for m, l in [(3, 1), (4, 2), (5, 1)]:
            assert len(line_tadpole(m, l).edges) == m + l + 1

    def test_line_tadpole_is_the_diamond(self):
        k4_minus_edge = delete_edge(complete(4), (2, 4))
        assert are_isomorphic(line_tadpole(3, 1), k4_minus_edge)

    def test_cycle_chord(self):
        g = cycle_chord(2, 2)
        assert edges(g) == {(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)}
        assert cycle_chord(3, 3).d == 6 and len(cycle_chord(3, 3).edges) == 7
        with pytest.raises(DomainError):
            cycle_chord(1, 3)

    def test_cc_m3(self):
        assert edges(cc_m3_labeled(3)) == {(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 4)}
        g = cc_m3_labeled(4)
        assert g.d == 6 and len(g.edges) == 7

    def test_chord_parameterizations_line_up(self):
        # the (m+2)-cycle with chord at {2, m+1} splits its arcs as (m-1, 3)
        for m in (3, 4):
            assert are_isomorphic(cc_m3_labeled(m), cycle_chord(m - 1, 3))
        assert are_isomorphic(cycle_chord(2, 2), line_tadpole(3, 1))

    def test_claw(self):
        assert edges(claw()) == {(1, 2), (1, 3), (1, 4)}

    def test_rejects_bad_edges(self):
        with pytest.raises(DomainError):
            LabeledGraph(3, [(1, 4)])
        with pytest.raises(DomainError):
            LabeledGraph(3, [(2, 2)])


class TestOperations:
    def test_disjoint_union(self):
        g = disjoint_union(path(2), complete(1))
        assert g.d == 3 and edges(g) == {(1, 2)}
        h = disjoint_union(path(2), path(2))
        assert h.d == 4 and edges(h) == {(1, 2), (3, 4)}
        assert disjoint_union(path(3), empty_graph(0)) == path(3)

    def test_clique_attach(self):
        assert clique_attach(path(2), 2) == path(3)
        assert clique_attach(path(3), 1) == path(3)
        assert clique_attach(line_tadpole(3, 1), 2) == line_tadpole(3, 2)
        assert clique_attach(complete(1), 3).d == 3
        assert len(clique_attach(complete(1), 3).edges) == 3

    def test_delete_contract(self):
        assert contract_edge(path(3), (2, 3)) == path(2)
        assert contract_edge(cycle(3), (2, 3)) == path(2)
        assert are_isomorphic(delete_edge(cycle(4), (2, 3)), path(4))
        with pytest.raises(DomainError):
            contract_edge(path(3), (1, 2))
        with pytest.raises(DomainError):
            delete_edge(path(3), (1, 3))

    def test_relabel(self):
        g = tadpole(3, 1)
        assert relabel(g, [1, 2, 3, 4]) == g
        swapped = relabel(g, [4, 2, 3, 1])
        assert edges(swapped) == {(2, 4), (3, 4), (2, 3), (1, 3)}
        assert relabel(swapped, [4, 2, 3, 1]) == g
        with pytest.raises(DomainError):
            relabel(g, [1, 1, 2, 3])


class TestComponents:
    def test_examples(self):
        assert component_partition(3, []) == P("1|2|3")
        assert component_partition(3, [(1, 2)]) == P("12|3")
        assert component_partition(4, [(1, 2), (3, 4)]) == P("12|34")

    def test_connected_iff_one_block(self):
        # every corpus graph is connected; dropping a cut edge disconnects
        for _, g in corpus(6):
            assert component_partition(g.d, g.edge_list).num_blocks == 1
        tail = tadpole(3, 2)
        assert component_partition(tail.d, tail.edges - {(4, 5)}).num_blocks == 2

    def test_monotone_under_subset(self):
        g = tadpole(4, 2)
        es = g.edge_list
        small = component_partition(g.d, es[:2])
        large = component_partition(g.d, es[:5])
        assert is_refinement(small, large)


class TestChromatic:
    def test_against_direct_enumeration(self):
        cases = [(path(3), 2), (cycle(3), 3), (claw(), 3), (diamond(), 4), (tadpole(3, 1), 3)]
        for g, k in cases:
            assert chromatic_polynomial_value(g, k) == count_colorings_direct(g, k)

    def test_examples(self):
        assert chromatic_polynomial_value(path(3), 2) == 2
        assert chromatic_polynomial_value(cycle(3), 3) == 6
        assert chromatic_polynomial_value(cycle(5), 0) == 0

    def test_empty_graph(self):
        assert chromatic_polynomial_value(empty_graph(3), 2) == 8


class TestSpecsAndJson:
    def test_dsl(self):
        assert parse_graph("path:6") == path(6)
        assert parse_graph("tadpole:5,2") == tadpole(5, 2)
        assert parse_graph("ltadpole:4,2") == line_tadpole(4, 2)
        assert parse_graph("cc:4,3") == cycle_chord(4, 3)
        assert parse_graph("ccm3:4") == cc_m3_labeled(4)
        assert parse_graph("claw") == claw()
        with pytest.raises(DomainError):
            parse_graph("hypercube:3")

    def test_json_roundtrip(self, tmp_path):
        g = cc_m3_labeled(3)
        blob = json.dumps(g.to_json())
        assert LabeledGraph.from_json(json.loads(blob)) == g
        f = tmp_path / "g.json"
        f.write_text(blob)
        assert parse_graph(str(f)) == g

    def test_corpus_is_deterministic(self):
        a = [(name, g.d, len(g.edges)) for name, g in corpus()]
        b = [(name, g.d, len(g.edges)) for name, g in corpus()]
        assert a == b
        names = [name for name, _, _ in a]
        assert "diamond" in names and "tadpole:3,1" in names
        assert all(g.d <= 8 for _, g in corpus())
