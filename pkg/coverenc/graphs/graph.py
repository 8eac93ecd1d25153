import itertools
import logging

import networkx as nx
import numpy as np

from coverenc.exceptions import ParameterError

logger = logging.getLogger(__name__)


class Graph:
    """
    Undirected simple graph on vertices 1..n with optional structured vertex labels.

    Interval graphs built by ``build_interval_graph`` carry ``interval_info = (positions, variant)``
    and label every vertex with its interval ``(i, j)``.
    """

    def __init__(self, n, edges=(), labels=None, interval_info=None):
        if n < 0:
            raise ParameterError(f"Vertex count must be non-negative, got {n}")
        self.n = n
        self._adj = [set() for _ in range(n + 1)]
        self._labels = dict(labels) if labels else {}
        self.interval_info = interval_info
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u, v):
        if u == v:
            raise ParameterError(f"Self-loop on vertex {u}")
        for w in (u, v):
            if not 1 <= w <= self.n:
                raise ParameterError(f"Vertex {w} outside [1, {self.n}]")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def has_edge(self, u, v):
        return v in self._adj[u]

    def neighbors(self, v):
        return sorted(self._adj[v])

    def degree(self, v):
        return len(self._adj[v])

    def vertices(self):
        return range(1, self.n + 1)

    def edges(self):
        """Edges (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(1, self.n + 1) for v in sorted(self._adj[u]) if u < v]

    @property
    def num_edges(self):
        return sum(len(nbrs) for nbrs in self._adj) // 2

    def label(self, v):
        """Structured label of a vertex; ``(v,)`` when none was given."""
        return self._labels.get(v, (v,))

    def has_labels(self):
        return bool(self._labels)

    def vertex_of_label(self, label):
        for v in self.vertices():
            if self.label(v) == tuple(label):
                return v
        raise KeyError(f"No vertex labelled {label}")

    def adjacency_matrix(self):
        """Boolean numpy matrix indexed from 0 (vertex v is row v - 1)."""
        matrix = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            matrix[u - 1, v - 1] = True
            matrix[v - 1, u - 1] = True
        return matrix

    def adjacency_masks(self):
        """Neighbourhood bitmasks; bit v - 1 stands for vertex v. Index 0 is unused."""
        masks = [0] * (self.n + 1)
        for v in self.vertices():
            for w in self._adj[v]:
                masks[v] |= 1 << (w - 1)
        return masks

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        g.add_edges_from(self.edges())
        return g

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges() == other.edges()

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


def from_networkx(g, labels=None):
    """
    Convert a networkx graph, numbering its nodes 1..n in sorted order.
    """
    nodes = sorted(g.nodes)
    index = {node: position for position, node in enumerate(nodes, start=1)}
    edges = [(index[u], index[v]) for u, v in g.edges if u != v]
    return Graph(len(nodes), edges, labels=labels)


def graph_from_edges(n, edges):
    return Graph(n, edges)


def complete_graph(n):
    return from_networkx(nx.complete_graph(n))


def complete_bipartite(a, b):
    """K_{a,b} with sides {1..a} and {a+1..a+b}."""
    return from_networkx(nx.complete_bipartite_graph(a, b))


def cycle_graph(n):
    return from_networkx(nx.cycle_graph(n))


def star_graph(leaves):
    """Star with centre 1 and the given number of leaves."""
    return from_networkx(nx.star_graph(leaves))


def petersen_graph():
    return from_networkx(nx.petersen_graph())


def random_graph(n, p, seed):
    """
    Erdos-Renyi G(n, p), reproducible for a given seed.

    Args:
        n (int): Vertex count.
        p (float): Edge probability.
        seed (int): Random seed.

    Returns:
        Graph: The sampled graph.
    """
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"Edge probability must lie in [0, 1], got {p}")
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def complement(graph):
    """Complement graph; vertex labels are kept."""
    g = nx.complement(graph.to_networkx())
    labels = {v: graph.label(v) for v in graph.vertices()} if graph.has_labels() else None
    return from_networkx(g, labels=labels)


def all_graphs(n):
    """Every labelled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1])
