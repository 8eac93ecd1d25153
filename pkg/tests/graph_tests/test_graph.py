import pytest

from coverenc.exceptions import FormatError, ParameterError
from coverenc.graphs.graph import (Graph, all_graphs, complement, complete_bipartite, complete_graph, cycle_graph,
                                   petersen_graph, random_graph, star_graph)
from coverenc.graphs.graph_io import read_graph, write_graph
from coverenc.graphs.intervals import Variant, build_interval_graph


def test_basic_graph():
    graph = Graph(4, [(1, 2), (2, 3), (3, 1)])
    assert graph.num_edges == 3
    assert graph.edges() == [(1, 2), (1, 3), (2, 3)]
    assert graph.neighbors(3) == [1, 2]
    assert graph.degree(4) == 0
    assert graph.label(2) == (2,)


@pytest.mark.parametrize("edge", [(1, 1), (0, 2), (2, 5)])
def test_invalid_edges(edge):
    with pytest.raises(ParameterError):
        Graph(4, [edge])


def test_generators():
    assert complete_graph(5).num_edges == 10
    assert cycle_graph(5).num_edges == 5
    assert petersen_graph().num_edges == 15
    bipartite = complete_bipartite(2, 3)
    assert bipartite.num_edges == 6
    assert bipartite.has_edge(1, 3) and not bipartite.has_edge(1, 2)
    star = star_graph(4)
    assert star.degree(1) == 4


def test_random_graph_is_reproducible():
    assert random_graph(12, 0.5, seed=4) == random_graph(12, 0.5, seed=4)
    with pytest.raises(ParameterError):
        random_graph(5, 1.5, seed=0)


def test_complement():
    c5 = cycle_graph(5)
    assert complement(c5).num_edges == 5
    assert complement(complete_graph(4)).num_edges == 0


def test_complement_keeps_labels_but_not_interval_metadata():
    graph = build_interval_graph(4, Variant.I)
    other = complement(graph)
    assert other.label(1) == graph.label(1)
    assert other.interval_info is None


def test_all_graphs():
    assert len(list(all_graphs(4))) == 64
    assert sum(1 for g in all_graphs(3) if g.num_edges == 3) == 1


def test_adjacency():
    graph = Graph(3, [(1, 3)])
    matrix = graph.adjacency_matrix()
    assert matrix[0, 2] and matrix[2, 0] and not matrix[0, 1]
    assert graph.adjacency_masks() == [0, 0b100, 0, 0b001]


def test_graph_file_round_trip():
    graph = build_interval_graph(4, Variant.I0)
    parsed = read_graph(write_graph(graph))
    assert parsed == graph
    assert parsed.interval_info == (4, Variant.I0)
    assert parsed.label(6) == (3, 4)


def test_graph_file_errors():
    with pytest.raises(FormatError):
        read_graph("1 2\n")
    with pytest.raises(FormatError):
        read_graph("p graph 3 2\n1 2\n")
    with pytest.raises(FormatError):
        read_graph("p graph 2 1\n1 1\n")
