from .graph import (Graph, all_graphs, complement, complete_bipartite, complete_graph, cycle_graph, from_networkx,
                    graph_from_edges, petersen_graph, random_graph, star_graph)
from .intervals import (BlockParams, EdgeClass, Interval, Variant, attribute_edges, build_interval_graph,
                        classify_edge, count_interval_edges, edge_class_conditions, interval_edges, intervals_of,
                        is_edge)
from .graph_io import read_graph, write_graph
