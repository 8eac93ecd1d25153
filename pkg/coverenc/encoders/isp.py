"""
Independent-set encoders over per-vertex literals: direct pairwise, clique-covering (CC) and
biclique-covering (BC).
"""
import logging

from coverenc.cnf.formula import Formula
from coverenc.cnf.varmap import VarName
from coverenc.encoders.amo import amo_product

logger = logging.getLogger(__name__)


def vertex_literals(graph, pool, kind="x"):
    """
    Base literal of every vertex, interned as ``kind(label)``.

    Returns:
        dict: Vertex -> positive literal.
    """
    return {v: pool.intern(VarName(kind, tuple(graph.label(v)))) for v in graph.vertices()}


def encode_direct_isp(graph, vertex_lits, sink=None):
    """One binary clause per edge."""
    sink = Formula() if sink is None else sink
    for u, v in graph.edges():
        sink.add_clause((-vertex_lits[u], -vertex_lits[v]))
    return sink


def encode_cc_isp(graph, cover, pool, vertex_lits=None, sink=None):
    """
    Clique-covering encoding: an at-most-one constraint over the literals of every clique.

    Args:
        graph (Graph): Graph to encode.
        cover (CliqueCover): Valid clique covering of the graph.
        pool (VarMap): Variable pool.
        vertex_lits (dict): Vertex -> literal, the ``x(label)`` variables when None.
        sink (Formula): Clause sink.

    Returns:
        The sink.
    """
    cover.validate(graph)
    vertex_lits = vertex_literals(graph, pool) if vertex_lits is None else vertex_lits
    sink = Formula() if sink is None else sink
    for clique in cover.cliques:
        amo_product([vertex_lits[v] for v in clique], pool, sink)
    logger.info(f"CC-ISP encoding of {graph} with {len(cover)} cliques: {len(sink)} clauses")
    return sink


def encode_bc_isp(graph, cover, pool, vertex_lits=None, sink=None):
    """
    Biclique-covering encoding. A K_{1,1} becomes the direct binary clause; any other biclique
    (A, B) gets an auxiliary x_A with clauses (-x_v | x_A) for v in A and (-x_A | -x_w) for w in B,
    the smaller side playing A.

    Args:
        graph (Graph): Graph to encode.
        cover (BicliqueCover): Valid biclique covering of the graph.
        pool (VarMap): Variable pool.
        vertex_lits (dict): Vertex -> literal, the ``x(label)`` variables when None.
        sink (Formula): Clause sink.

    Returns:
        The sink.
    """
    cover.validate(graph)
    vertex_lits = vertex_literals(graph, pool) if vertex_lits is None else vertex_lits
    sink = Formula() if sink is None else sink
    for side_a, side_b in cover.bicliques:
        if len(side_a) == 1 and len(side_b) == 1:
            sink.add_clause((-vertex_lits[side_a[0]], -vertex_lits[side_b[0]]))
            continue
        if (len(side_a), sorted(side_a)) > (len(side_b), sorted(side_b)):
            side_a, side_b = side_b, side_a
        x_a = pool.fresh_aux("bc")
        for v in side_a:
            sink.add_clause((-vertex_lits[v], x_a))
        for w in side_b:
            sink.add_clause((-x_a, -vertex_lits[w]))
    logger.info(f"BC-ISP encoding of {graph} with {len(cover)} bicliques: {len(sink)} clauses")
    return sink
