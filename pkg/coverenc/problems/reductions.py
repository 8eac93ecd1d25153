"""
Graph problems reduced to the independent-set property: independent set and vertex cover of a
given size, k-coloring and clique.
"""
import logging
from enum import Enum

from coverenc.cnf.formula import Formula
from coverenc.cnf.varmap import VarMap, VarName
from coverenc.encoders.amo import cardinality_equals_k
from coverenc.encoders.coverings import BicliqueCover, CliqueCover, greedy_biclique_cover, greedy_clique_cover
from coverenc.encoders.intervals import (BlockEncoderParams, encode_interval_isp_block83,
                                         encode_interval_isp_recursive)
from coverenc.encoders.isp import encode_bc_isp, encode_cc_isp, encode_direct_isp, vertex_literals
from coverenc.exceptions import ParameterError
from coverenc.graphs.graph import complement

logger = logging.getLogger(__name__)


class Strategy(str, Enum):
    DIRECT = "direct"
    CLIQUE_COVER = "cliqueCover"
    BICLIQUE_COVER = "bicliqueCover"
    RECURSIVE_BLOCKS = "recursiveBlocks"
    BLOCK83 = "block83"

    @property
    def needs_intervals(self):
        return self in (Strategy.RECURSIVE_BLOCKS, Strategy.BLOCK83)


def as_strategy(value):
    try:
        return Strategy(value)
    except ValueError:
        names = ", ".join(s.value for s in Strategy)
        raise ParameterError(f"Unknown strategy {value!r}, expected one of {names}")


def encode_isp(graph, vertex_lits, pool, strategy=Strategy.DIRECT, sink=None, cover=None, block_count=None,
               path=""):
    """
    Encode the independent-set property of a graph over the given literals.

    Args:
        graph (Graph): Graph to encode.
        vertex_lits (dict): Vertex -> literal.
        pool (VarMap): Allocates auxiliary variables.
        strategy (Strategy): Encoder to use.
        sink (Formula): Clause sink.
        cover (CliqueCover or BicliqueCover): Cover for the covering strategies; greedy when None.
        block_count (int): Top-level block count of the recursive interval encoder.
        path (str): Prefix of the interval encoders' auxiliary names.

    Returns:
        The sink.
    """
    strategy = as_strategy(strategy)
    sink = Formula() if sink is None else sink

    if strategy is Strategy.DIRECT:
        return encode_direct_isp(graph, vertex_lits, sink)
    if strategy is Strategy.CLIQUE_COVER:
        cover = greedy_clique_cover(graph) if cover is None else cover
        if not isinstance(cover, CliqueCover):
            raise ParameterError("The cliqueCover strategy needs a clique cover")
        return encode_cc_isp(graph, cover, pool, vertex_lits, sink)
    if strategy is Strategy.BICLIQUE_COVER:
        cover = greedy_biclique_cover(graph) if cover is None else cover
        if not isinstance(cover, BicliqueCover):
            raise ParameterError("The bicliqueCover strategy needs a biclique cover")
        return encode_bc_isp(graph, cover, pool, vertex_lits, sink)

    if graph.interval_info is None:
        raise ParameterError(f"Strategy {strategy.value} only applies to interval graphs")
    n, variant = graph.interval_info
    by_interval = {tuple(graph.label(v)): lit for v, lit in vertex_lits.items()}
    if strategy is Strategy.RECURSIVE_BLOCKS:
        params = BlockEncoderParams(n, variant, k=block_count)
        return encode_interval_isp_recursive(params, by_interval, pool, sink, path=path)
    return encode_interval_isp_block83(n, variant, by_interval, pool, sink, path=path)


def encode_independent_set(graph, k=None, strategy=Strategy.DIRECT, pool=None, cover=None, block_count=None):
    """
    Independent set, of size exactly k when k is given.

    Args:
        graph (Graph): Input graph.
        k (int): Required size, or None for any independent set.
        strategy (Strategy): ISP encoder.
        pool (VarMap): Variable pool; the vertex variables are ``x(label)``.
        cover: Optional cover for the covering strategies.
        block_count (int): Top-level block count of the recursive interval encoder.

    Returns:
        Formula
    """
    pool = VarMap() if pool is None else pool
    vertex_lits = vertex_literals(graph, pool)
    formula = encode_isp(graph, vertex_lits, pool, strategy, cover=cover, block_count=block_count)
    if k is not None:
        cardinality_equals_k([vertex_lits[v] for v in graph.vertices()], k, pool, formula)
    logger.info(f"Independent set of {graph} (k={k}, {as_strategy(strategy).value}): {len(formula)} clauses")
    return formula


def encode_vertex_cover(graph, k, strategy=Strategy.DIRECT, pool=None, cover=None, block_count=None):
    """
    Vertex cover of size exactly k: the ISP encoding over negated vertex literals, since the
    complement of a vertex cover is an independent set.
    """
    pool = VarMap() if pool is None else pool
    vertex_lits = vertex_literals(graph, pool)
    negated = {v: -lit for v, lit in vertex_lits.items()}
    formula = encode_isp(graph, negated, pool, strategy, cover=cover, block_count=block_count)
    cardinality_equals_k([vertex_lits[v] for v in graph.vertices()], k, pool, formula)
    logger.info(f"Vertex cover of {graph} (k={k}, {as_strategy(strategy).value}): {len(formula)} clauses")
    return formula


def encode_coloring(graph, k, strategy=Strategy.DIRECT, pool=None, cover=None, block_count=None):
    """
    k-coloring: one ISP copy per color over variables ``x(label, c)`` and a clause giving every
    vertex at least one color. A vertex may take several colors; removing extra colors keeps a
    proper coloring, so satisfiability is unchanged.

    Args:
        graph (Graph): Input graph.
        k (int): Number of colors (>= 1).
        strategy (Strategy): ISP encoder used for each color.
        pool (VarMap): Variable pool.
        cover: Optional cover, shared by all colors.
        block_count (int): Top-level block count of the recursive interval encoder.

    Returns:
        Formula
    """
    if k < 1:
        raise ParameterError(f"Coloring needs k >= 1, got {k}")
    strategy = as_strategy(strategy)
    pool = VarMap() if pool is None else pool
    if cover is None and strategy is Strategy.CLIQUE_COVER:
        cover = greedy_clique_cover(graph)
    elif cover is None and strategy is Strategy.BICLIQUE_COVER:
        cover = greedy_biclique_cover(graph)

    formula = Formula()
    colors = {}
    for c in range(1, k + 1):
        colors[c] = {v: pool.intern(VarName("x", tuple(graph.label(v)) + (c,))) for v in graph.vertices()}
        encode_isp(graph, colors[c], pool, strategy, formula, cover=cover, block_count=block_count, path=f"c{c}")
    for v in graph.vertices():
        formula.add_clause([colors[c][v] for c in range(1, k + 1)])
    logger.info(f"{k}-coloring of {graph} ({strategy.value}): {len(formula)} clauses")
    return formula


def encode_clique(graph, k, strategy=Strategy.DIRECT, pool=None, cover=None, block_count=None):
    """Clique of size exactly k, as an independent set of the complement graph."""
    return encode_independent_set(complement(graph), k, strategy, pool, cover, block_count)
