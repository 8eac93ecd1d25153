import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from coverenc import config as cfg
from coverenc.cnf.varmap import VarName
from coverenc.exceptions import MissingVariableError, SizeGuardError
from coverenc.oracle.solver import DpllSolver

# config
config = cfg.load_config()

NB_THREADS = config["nb_threads"]  # Number of threads checking assignments in parallel
DEFAULT_SAMPLES = config["oracle"]["samples"]
DEFAULT_SEED = config["oracle"]["seed"]
MAX_EXHAUSTIVE_VERTICES = config["oracle"]["max_exhaustive_vertices"]
MAX_ENUMERATION_VERTICES = config["oracle"]["max_enumeration_vertices"]
MAX_EQUISAT_VARS = config["oracle"]["max_equisat_vars"]

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"

logger = logging.getLogger(__name__)


@dataclass
class Verdict:
    passed: bool
    checked: int
    witness: dict = field(default=None)
    message: str = ""

    def __bool__(self):
        return self.passed


def enumerate_independent_sets(graph, max_vertices=MAX_ENUMERATION_VERTICES):
    """
    List every independent set of a graph.

    Args:
        graph (Graph): Input graph.
        max_vertices (int): Size guard.

    Returns:
        list: Sorted tuples of vertices, ordered by size then lexicographically.
    """
    if graph.n > max_vertices:
        raise SizeGuardError(f"Enumeration limited to {max_vertices} vertices, graph has {graph.n}")
    masks = graph.adjacency_masks()
    found = []

    def extend(v, chosen, chosen_mask):
        if v > graph.n:
            found.append(tuple(chosen))
            return
        extend(v + 1, chosen, chosen_mask)
        if not masks[v] & chosen_mask:
            chosen.append(v)
            extend(v + 1, chosen, chosen_mask | 1 << (v - 1))
            chosen.pop()

    extend(1, [], 0)
    found.sort(key=lambda s: (len(s), s))
    return found


def base_variables(graph, varmap, kind="x"):
    """
    Look up the base variable of every vertex, named ``kind(label)``.

    Returns:
        list: Variable index of vertex v at position v - 1.
    """
    variables = []
    for v in graph.vertices():
        name = VarName(kind, tuple(graph.label(v)))
        if name not in varmap:
            raise MissingVariableError(f"Vertex {v} has no base variable {name}")
        variables.append(varmap.get(name))
    return variables


def _is_independent(mask, adjacency):
    remaining = mask
    while remaining:
        low = remaining & -remaining
        if adjacency[low.bit_length()] & mask:
            return False
        remaining ^= low
    return True


def _assignment_masks(width, mode, samples, seed):
    if mode == EXHAUSTIVE:
        return list(range(1 << width))
    rng = np.random.default_rng(seed)
    densities = rng.random(samples)
    bits = rng.random((samples, width)) < densities[:, None]
    return [sum(1 << int(bit) for bit in np.flatnonzero(row)) for row in bits]


def _chunks(items, nb_chunks):
    chunk_size = max(1, -(-len(items) // max(1, nb_chunks)))
    return [(start, items[start:start + chunk_size]) for start in range(0, len(items), chunk_size)]


def _to_assignment(mask, variables):
    return {var: bool(mask >> bit & 1) for bit, var in enumerate(variables)}


def check_isp_encoding(graph, formula, varmap, mode=EXHAUSTIVE, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED,
                       nb_threads=NB_THREADS, max_vertices=MAX_EXHAUSTIVE_VERTICES):
    """
    Check that a formula encodes the independent-set property of a graph: for every assignment
    of the base variables, the restricted formula is satisfiable exactly when the selected
    vertices are independent. Auxiliary variables stay free.

    Args:
        graph (Graph): The graph.
        formula (Formula): Candidate encoding.
        varmap (VarMap): Names the base variable of each vertex as ``x(label)``.
        mode (str): ``exhaustive`` or ``sampled``.
        samples (int): Sample count in sampled mode.
        seed (int): Seed in sampled mode.
        nb_threads (int): Number of chunks checked in parallel.
        max_vertices (int): Size guard for exhaustive mode.

    Returns:
        Verdict: Failing verdicts carry the first witnessing assignment.
    """
    if mode == EXHAUSTIVE and graph.n > max_vertices:
        raise SizeGuardError(f"Exhaustive check limited to {max_vertices} vertices, graph has {graph.n}")
    variables = base_variables(graph, varmap)
    adjacency = graph.adjacency_masks()
    masks = _assignment_masks(graph.n, mode, samples, seed)
    logger.info(f"Checking ISP encoding of {graph} ({len(formula)} clauses) over {len(masks)} assignments ({mode}).")

    def process_chunk(chunk):
        start, chunk_masks = chunk
        solver = DpllSolver(formula)
        for offset, mask in enumerate(chunk_masks):
            expected = _is_independent(mask, adjacency)
            if solver.solve(_to_assignment(mask, variables)).satisfiable != expected:
                return start + offset, mask, expected
        return None

    with ThreadPoolExecutor(max_workers=max(1, nb_threads)) as executor:
        results = list(executor.map(process_chunk, _chunks(masks, nb_threads)))

    failures = [result for result in results if result is not None]
    if not failures:
        return Verdict(True, len(masks), message=f"{len(masks)} assignments agree")
    index, mask, expected = min(failures)
    selected = [v for v in graph.vertices() if mask >> (v - 1) & 1]
    expectation = "independent but UNSAT" if expected else "not independent but SAT"
    logger.info(f"ISP check failed on vertices {selected}: {expectation}")
    return Verdict(False, index + 1, _to_assignment(mask, variables),
                   f"selection {selected} is {expectation}")


def check_equisat(formula1, formula2, shared_vars, max_vars=MAX_EQUISAT_VARS, nb_threads=NB_THREADS):
    """
    Check that two formulas agree on satisfiability under every assignment of the shared variables.

    Args:
        formula1, formula2 (Formula): Formulas to compare.
        shared_vars (iterable): Variable indices to enumerate.
        max_vars (int): Size guard.
        nb_threads (int): Number of chunks checked in parallel.

    Returns:
        Verdict: Failing verdicts carry the first assignment on which they disagree.
    """
    variables = sorted(set(shared_vars))
    if len(variables) > max_vars:
        raise SizeGuardError(f"Projection check limited to {max_vars} shared variables, got {len(variables)}")
    masks = list(range(1 << len(variables)))
    logger.info(f"Checking equisatisfiability over {len(variables)} shared variables.")

    def process_chunk(chunk):
        start, chunk_masks = chunk
        solver1, solver2 = DpllSolver(formula1), DpllSolver(formula2)
        for offset, mask in enumerate(chunk_masks):
            assignment = _to_assignment(mask, variables)
            if solver1.solve(assignment).satisfiable != solver2.solve(assignment).satisfiable:
                return start + offset, mask
        return None

    with ThreadPoolExecutor(max_workers=max(1, nb_threads)) as executor:
        results = list(executor.map(process_chunk, _chunks(masks, nb_threads)))

    failures = [result for result in results if result is not None]
    if not failures:
        return Verdict(True, len(masks), message=f"{len(masks)} assignments agree")
    index, mask = min(failures)
    return Verdict(False, index + 1, _to_assignment(mask, variables), "formulas disagree on the witness")


def realized_conflicts(formula, base_vars):
    """
    Semantic conflict set of an encoding: the pairs of base variables that cannot both be true
    when every other base variable is false.

    Args:
        formula (Formula): Encoding to audit.
        base_vars (dict): Vertex key -> variable index.

    Returns:
        tuple: (set of frozenset key pairs in conflict, list of keys unsatisfiable on their own,
        whether the all-false assignment is satisfiable).
    """
    solver = DpllSolver(formula)
    keys = list(base_vars)
    all_false = {base_vars[key]: False for key in keys}

    def selecting(*chosen):
        assignment = dict(all_false)
        for key in chosen:
            assignment[base_vars[key]] = True
        return solver.solve(assignment).satisfiable

    empty_ok = selecting()
    blocked = [key for key in keys if not selecting(key)]
    conflicts = {frozenset(pair) for pair in itertools.combinations(keys, 2) if not selecting(*pair)}
    logger.info(f"Audit found {len(conflicts)} conflicting pairs among {len(keys)} base variables.")
    return conflicts, blocked, empty_ok
