import math

import pytest

from coverenc.cnf.formula import ClauseCounter
from coverenc.cnf.varmap import VarMap, VarName
from coverenc.encoders.intervals import (BlockEncoderParams, BlockRule, IptInstance, encode_interval_isp_block83,
                                         encode_interval_isp_recursive, encode_ipt, encode_nip)
from coverenc.encoders.isp import vertex_literals
from coverenc.exceptions import ParameterError
from coverenc.graphs.intervals import Variant, build_interval_graph, count_interval_edges, interval_edges
from coverenc.oracle.checker import SAMPLED, check_equisat, check_isp_encoding, realized_conflicts
from coverenc.oracle.solver import DpllSolver

# small enough that desk-sized instances still recurse
BASE = 3


def interval_literals(n, variant, pool):
    graph = build_interval_graph(n, variant)
    return graph, {graph.label(v): lit for v, lit in vertex_literals(graph, pool).items()}


def assert_conflicts_match(formula, n, variant, lits):
    conflicts, blocked, empty_ok = realized_conflicts(formula, lits)
    assert empty_ok
    assert blocked == []
    assert conflicts == {frozenset(edge) for edge in interval_edges(n, variant)}


@pytest.mark.parametrize("n, expected", [(2, 6), (3, 15), (6, 66)])
def test_ipt_size(n, expected):
    inst = IptInstance.create(n, VarMap())
    assert len(encode_ipt(inst)) == expected
    assert expected <= 6 * n * n


@pytest.mark.parametrize("n, expected", [(2, 4), (3, 10)])
def test_nip_size(n, expected):
    assert len(encode_nip(IptInstance.create(n, VarMap()))) == expected


@pytest.mark.parametrize("n", range(2, 6))
def test_ipt_agrees_with_nip(n):
    pool = VarMap()
    inst = IptInstance.create(n, pool)
    shared = list(inst.x.values()) + list(inst.t.values())
    assert check_equisat(encode_nip(inst), encode_ipt(inst), shared).passed


@pytest.mark.parametrize("n", [10, 32, 64])
def test_ipt_size_bound(n):
    assert len(encode_ipt(IptInstance.create(n, VarMap()), ClauseCounter())) <= 6 * n * n


@pytest.mark.parametrize("n", range(2, 6))
def test_ipt_models_follow_selected_intervals(n):
    # the x values force every t and z: t(l) iff l is covered, z(a, b) iff [a, b] lies inside a selection
    inst = IptInstance.create(n, VarMap())
    solver = DpllSolver(encode_ipt(inst))
    pairs = sorted(inst.x)
    for mask in range(1 << len(pairs)):
        chosen = [pairs[bit] for bit in range(len(pairs)) if mask >> bit & 1]
        assumptions = {inst.x[p]: p in chosen for p in pairs}
        expected = {inst.t[pos]: any(i <= pos <= j for i, j in chosen) for pos in inst.t}
        expected.update({z: any(i <= a and b <= j for i, j in chosen) for (a, b), z in inst.z.items()})
        result = solver.solve(assumptions)
        assert result.satisfiable
        assert {var: result.model[var] for var in expected} == expected, chosen
        for var, value in expected.items():
            assert not solver.solve({**assumptions, var: not value}).satisfiable, (chosen, var)


def test_ipt_instance_validation():
    with pytest.raises(ParameterError):
        IptInstance.create(1, VarMap())
    with pytest.raises(ParameterError):
        IptInstance.create(3, VarMap(), x={(1, 2): 1})
    pool = VarMap()
    IptInstance.create(3, pool, path="/b2")
    assert VarName("z", (1, 3), "/b2") in pool


def test_block_encoder_params():
    params = BlockEncoderParams(10)
    assert (params.k, params.b) == (3, 4)
    assert BlockEncoderParams(10, b=5).k == 2
    assert BlockEncoderParams(10, k=4).b == 3
    assert BlockEncoderParams(9, k=4).k == 3
    assert BlockEncoderParams(64).blocks.k == 6
    with pytest.raises(ParameterError):
        BlockEncoderParams(10, k=3, b=5)
    with pytest.raises(ParameterError):
        BlockEncoderParams(10, b=0)
    with pytest.raises(ParameterError):
        BlockEncoderParams(10, recursion_base=1)


@pytest.mark.parametrize("n, b, k", [(8, 2, 4), (16, 3, 6), (32, 4, 8)])
def test_log_size_block_rule(n, b, k):
    params = BlockEncoderParams(n, rule="log-size")
    assert params.rule is BlockRule.LOG_SIZE
    assert (params.b, params.k) == (b, k)
    nested = params.nested(k, Variant.I0)
    assert nested.rule is BlockRule.LOG_SIZE and nested.variant is Variant.I0


def test_unknown_block_rule():
    with pytest.raises(ParameterError):
        BlockEncoderParams(16, rule="log-depth")


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
def test_small_instances_are_direct(variant):
    pool = VarMap()
    _, lits = interval_literals(5, variant, pool)
    formula = encode_interval_isp_recursive(BlockEncoderParams(5, variant), lits, pool)
    assert len(formula) == count_interval_edges(5, variant)
    assert pool.top == 10


def test_i5_direct_has_40_clauses():
    pool = VarMap()
    _, lits = interval_literals(5, Variant.I, pool)
    assert len(encode_interval_isp_recursive(BlockEncoderParams(5, recursion_base=BASE), lits, pool)) == 40


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
def test_recursive_encoding_exhaustively(variant):
    pool = VarMap()
    graph, lits = interval_literals(6, variant, pool)
    formula = encode_interval_isp_recursive(BlockEncoderParams(6, variant, k=3, recursion_base=BASE), lits, pool)
    assert pool.top > graph.n
    assert check_isp_encoding(graph, formula, pool).passed


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
@pytest.mark.parametrize("k", [3, 4, None, pytest.param(6, marks=pytest.mark.slow),
                               pytest.param(7, marks=pytest.mark.slow)])
@pytest.mark.parametrize("n", range(5, 15))
def test_recursive_encoding_conflicts(n, k, variant):
    if k is not None and k > n:
        pytest.skip("more blocks than positions")
    pool = VarMap()
    _, lits = interval_literals(n, variant, pool)
    formula = encode_interval_isp_recursive(BlockEncoderParams(n, variant, k=k, recursion_base=BASE), lits, pool)
    assert_conflicts_match(formula, n, variant, lits)


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
@pytest.mark.parametrize("n", range(8, 15))
def test_log_size_blocks_conflicts(n, variant):
    pool = VarMap()
    _, lits = interval_literals(n, variant, pool)
    params = BlockEncoderParams(n, variant, recursion_base=BASE, rule=BlockRule.LOG_SIZE)
    assert_conflicts_match(encode_interval_isp_recursive(params, lits, pool), n, variant, lits)


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
@pytest.mark.parametrize("n", [8, 10, pytest.param(12, marks=pytest.mark.slow)])
def test_recursive_encoding_on_sampled_assignments(n, variant):
    pool = VarMap()
    graph, lits = interval_literals(n, variant, pool)
    formula = encode_interval_isp_recursive(BlockEncoderParams(n, variant, k=3, recursion_base=BASE), lits, pool)
    assert check_isp_encoding(graph, formula, pool, mode=SAMPLED, samples=10_000, seed=n).passed


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
def test_nested_recursion_conflicts(variant):
    # 12 positions in 3 blocks: the block pairs recurse once more
    pool = VarMap()
    _, lits = interval_literals(12, variant, pool)
    formula = encode_interval_isp_recursive(BlockEncoderParams(12, variant, k=3, recursion_base=BASE), lits, pool)
    assert VarName("y", (1, 2), "/x1-2") in pool
    assert_conflicts_match(formula, 12, variant, lits)


def test_auxiliary_names_carry_the_recursion_path():
    pool = VarMap()
    _, lits = interval_literals(10, Variant.I, pool)
    encode_interval_isp_recursive(BlockEncoderParams(10, k=3, recursion_base=BASE), lits, pool)
    assert VarName("y", (1, 3)) in pool
    assert VarName("s", (1, 2)) in pool
    assert VarName("t", (1,), "/b1") in pool
    assert VarName("z", (1, 2), "/x1-2/b1") in pool


def test_missing_vertex_literal():
    lits = {(1, 2): 1, (1, 3): 2}
    with pytest.raises(ParameterError):
        encode_interval_isp_recursive(BlockEncoderParams(3), lits, VarMap())
    with pytest.raises(ParameterError):
        encode_interval_isp_block83(3, Variant.I, lits, VarMap())


def count_recursive(n, variant):
    pool = VarMap()
    _, lits = interval_literals(n, variant, pool)
    return len(encode_interval_isp_recursive(BlockEncoderParams(n, variant), lits, pool, sink=ClauseCounter()))


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
@pytest.mark.parametrize("n", [40, 64, 128, pytest.param(256, marks=pytest.mark.slow)])
def test_recursive_size_bound(n, variant):
    assert count_recursive(n, variant) <= 26 * n * n * math.log2(n)


def test_recursive_beats_direct():
    assert count_recursive(64, Variant.I) < count_interval_edges(64, Variant.I)


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
def test_block83_exhaustively(variant):
    pool = VarMap()
    graph, lits = interval_literals(6, variant, pool)
    formula = encode_interval_isp_block83(6, variant, lits, pool)
    assert pool.top > graph.n
    assert check_isp_encoding(graph, formula, pool).passed


@pytest.mark.parametrize("variant", [Variant.I, Variant.I0])
@pytest.mark.parametrize("n", [7, 9, 11])
def test_block83_conflicts(n, variant):
    pool = VarMap()
    _, lits = interval_literals(n, variant, pool)
    formula = encode_interval_isp_block83(n, variant, lits, pool)
    assert_conflicts_match(formula, n, variant, lits)


def test_block83_direct_threshold():
    pool = VarMap()
    _, lits = interval_literals(5, Variant.I, pool)
    assert len(encode_interval_isp_block83(5, Variant.I, lits, pool)) == 40
    with pytest.raises(ParameterError):
        encode_interval_isp_block83(1, Variant.I, {}, VarMap())


@pytest.mark.parametrize("n", [20, 40, 80])
def test_block83_size(n):
    pool = VarMap()
    _, lits = interval_literals(n, Variant.I, pool)
    size = len(encode_interval_isp_block83(n, Variant.I, lits, pool, sink=ClauseCounter()))
    assert size <= 12 * n ** (8 / 3)
