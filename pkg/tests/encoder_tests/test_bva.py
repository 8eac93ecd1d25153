import numpy as np
import pytest

from coverenc.cnf.formula import Formula, make_clause
from coverenc.cnf.varmap import VarMap, VarName
from coverenc.encoders.amo import amo_pairwise
from coverenc.encoders.bva import (BvaReencoder, GridProduct, amo_bva_construct, bva_reencode, bva_step,
                                   find_grid_product)
from coverenc.encoders.isp import encode_direct_isp, vertex_literals
from coverenc.exceptions import GridProductError, ParameterError
from coverenc.graphs.graph import complete_bipartite, complete_graph
from coverenc.oracle.checker import check_equisat, check_isp_encoding

X1, X2, P, Q, R = 1, 2, 3, 4, 5
EXAMPLE_GAMMA = [(P, Q), (Q, R), (-P, -R, -Q)]


def pool_of(size):
    pool = VarMap()
    for v in range(1, size + 1):
        pool.fresh(VarName("v", (v,)))
    return pool


def test_example_expansion():
    product = GridProduct.of([X1, X2], EXAMPLE_GAMMA)
    assert product.expand() == {make_clause(g + (lit,)) for lit in (X1, X2) for g in EXAMPLE_GAMMA}
    assert len(product.expand()) == 6
    assert product.gain == 1


def test_single_literal_product():
    assert GridProduct.of([X1], [(6,)]).expand() == {(1, 6)}


def test_invalid_products():
    with pytest.raises(GridProductError):
        GridProduct.of([X1, -X1], [(P,)])
    with pytest.raises(GridProductError):
        GridProduct.of([X1], [(-X1, P)]).expand()
    with pytest.raises(GridProductError):
        GridProduct.of([X1], [(X1, P)]).expand()


def test_example_step():
    pool = pool_of(5)
    product = GridProduct.of([X1, X2], EXAMPLE_GAMMA)
    formula = Formula(product.expand())
    rewritten = bva_step(formula, product, pool)
    y = pool.top
    assert y == 6
    assert rewritten.clauses == {make_clause(c) for c in
                                 [(-y, X1), (-y, X2), (y, P, Q), (y, Q, R), (y, -P, -R, -Q)]}
    assert check_equisat(formula, rewritten, [X1, X2, P, Q, R]).passed
    # the input formula is untouched
    assert len(formula) == 6


def test_step_keeps_unrelated_clauses():
    pool = pool_of(6)
    product = GridProduct.of([X1, X2], EXAMPLE_GAMMA)
    formula = Formula(product.expand()) | Formula([(6, -1)])
    rewritten = bva_step(formula, product, pool)
    assert len(rewritten) == 6
    assert (-1, 6) in rewritten


def test_step_requires_the_product_in_the_formula():
    pool = pool_of(5)
    product = GridProduct.of([X1, X2], EXAMPLE_GAMMA)
    formula = Formula(product.expand())
    formula.remove_clause((X1, P, Q))
    with pytest.raises(GridProductError):
        bva_step(formula, product, pool)


def k33_encoding():
    graph = complete_bipartite(3, 3)
    pool = VarMap()
    return graph, encode_direct_isp(graph, vertex_literals(graph, pool)), pool


def test_detector_on_complete_bipartite_graph():
    _, formula, _ = k33_encoding()
    product = find_grid_product(formula)
    assert product.gain == 3
    assert product.lits == (-1, -2, -3)
    assert product.gamma == ((-4,), (-5,), (-6,))


def test_reencode_complete_bipartite_graph():
    graph, formula, pool = k33_encoding()
    reencoder = BvaReencoder()
    rewritten = reencoder.reencode(formula, pool)
    assert len(formula) == 9 and len(rewritten) == 6
    assert len(reencoder.steps) == 1
    assert reencoder.steps[0].gain == 3
    assert check_isp_encoding(graph, rewritten, pool).passed


def test_no_product_without_gain():
    assert find_grid_product(Formula([(1, 2), (-1, 3)])) is None
    pool = pool_of(3)
    formula = Formula([(1, 2), (-1, 3)])
    assert bva_reencode(formula, pool) == formula


def test_reencoding_complete_graph_keeps_isp():
    graph = complete_graph(7)
    pool = VarMap()
    formula = encode_direct_isp(graph, vertex_literals(graph, pool))
    rewritten = bva_reencode(formula, pool)
    assert len(rewritten) < len(formula)
    assert check_isp_encoding(graph, rewritten, pool).passed


def test_min_gain_and_max_steps():
    _, formula, pool = k33_encoding()
    assert bva_reencode(formula, pool, min_gain=4) == formula
    graph = complete_graph(8)
    pool = VarMap()
    formula = encode_direct_isp(graph, vertex_literals(graph, pool))
    reencoder = BvaReencoder(max_steps=1)
    reencoder.reencode(formula, pool)
    assert len(reencoder.steps) == 1


def random_formula(rng, num_vars):
    formula = Formula(max_var=num_vars)
    for _ in range(int(rng.integers(4, 30))):
        width = int(rng.integers(2, 4))
        variables = rng.choice(np.arange(1, num_vars + 1), size=width, replace=False)
        signs = rng.integers(0, 2, size=width)
        formula.add_clause([int(v) if s else -int(v) for v, s in zip(variables, signs)])
    return formula


def test_steps_preserve_projected_satisfiability():
    rng = np.random.default_rng(5)
    checked = 0
    for _ in range(200):
        num_vars = int(rng.integers(4, 9))
        formula = random_formula(rng, num_vars)
        # plant a grid product so that most cases take at least one step
        lits = [int(v) for v in rng.choice(np.arange(1, num_vars + 1), size=2, replace=False)]
        rest = [v for v in range(1, num_vars + 1) if v not in lits]
        for g in ((rest[0],), (-rest[1],), (rest[0], rest[1])):
            for lit in lits:
                formula.add_clause(g + (lit,))
        pool = pool_of(num_vars)
        product = find_grid_product(formula)
        if product is None:
            continue
        rewritten = bva_step(formula, product, pool)
        assert len(rewritten) == len(formula) - product.gain
        assert check_equisat(formula, rewritten, range(1, num_vars + 1)).passed
        checked += 1
    assert checked > 100


@pytest.mark.parametrize("n", range(3, 201))
def test_amo_construct_size(n):
    assert len(amo_bva_construct(range(1, n + 1), pool_of(n))) == 3 * n - 6


@pytest.mark.parametrize("n", [3, 4, 5, 8, 11])
def test_amo_construct_matches_pairwise(n):
    pool = pool_of(n)
    constructed = amo_bva_construct(range(1, n + 1), pool)
    assert check_equisat(amo_pairwise(range(1, n + 1)), constructed, range(1, n + 1)).passed


def test_amo_construct_needs_three_literals():
    with pytest.raises(ParameterError):
        amo_bva_construct([1, 2], pool_of(2))
