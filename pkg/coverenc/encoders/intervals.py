"""
Independent-set encodings of the interval graphs I_n and I_n^0.

The interval propagation trick (IPT) introduces t(l), "position l is covered by a selected interval",
with O(n^2) clauses through a ladder of z(i, j) variables, "[i, j] lies inside a selected interval".

The recursive encoder splits positions 1..n into k blocks and handles every edge class of
``coverenc.graphs.intervals`` with its own clause family:

    x   recursion on one block, or on the concatenation of two blocks
    y   block-pair variables y(l, r), recursively made disjoint as an instance of I_k^0, and
        kept apart from the intervals inside every block they pass through
    s   s(i, r): an interval starting at i ends in block r; pairwise conflicts, plus the block's IPT
    f   f(l, j): an interval ending at j starts in block l; conflicts with the block's IPT
    m   conflicts between f(l, j1) and s(i2, r) inside the block of j1 and i2

Every auxiliary variable is named with the recursion path that created it.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

from coverenc import config as cfg
from coverenc.cnf.formula import Formula
from coverenc.cnf.varmap import VarName
from coverenc.exceptions import ParameterError
from coverenc.graphs.intervals import BlockParams, Interval, Variant, as_variant, interval_edges, is_edge

# config
config = cfg.load_config()

RECURSION_BASE = config["intervals"]["recursion_base"]  # Up to this many positions the direct encoding is used
BLOCK83_DIRECT_THRESHOLD = config["intervals"]["block83_direct_threshold"]

logger = logging.getLogger(__name__)


def _pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass
class IptInstance:
    n: int
    x: dict
    t: dict
    z: dict

    @classmethod
    def create(cls, n, pool, x=None, path=""):
        """
        Allocate the t and z variables over positions 1..n.

        Args:
            n (int): Number of positions (>= 2).
            pool (VarMap): Variable pool.
            x (dict): (i, j) -> literal of the interval; ``x(i,j)@path`` variables when None.
            path (str): Recorded in the variable names.

        Returns:
            IptInstance
        """
        if n < 2:
            raise ParameterError(f"Interval propagation needs n >= 2, got {n}")
        pairs = _pairs(n)
        if x is None:
            x = {p: pool.intern(VarName("x", p, path)) for p in pairs}
        missing = [p for p in pairs if p not in x]
        if missing:
            raise ParameterError(f"No literal for interval {missing[0]}")
        t = {pos: pool.fresh(VarName("t", (pos,), path)) for pos in range(1, n + 1)}
        z = {p: pool.fresh(VarName("z", p, path)) for p in pairs}
        return cls(n, dict(x), t, z)


def _t_definitions(inst, sink):
    for pos in range(1, inst.n + 1):
        covering = [inst.x[(i, j)] for (i, j) in _pairs(inst.n) if i <= pos <= j]
        sink.add_clause([-inst.t[pos]] + covering)


def encode_nip(inst, sink=None):
    """
    Naive propagation: t(l) implies a selected interval covers l, and every selected interval
    implies the t of each position it covers. Theta(n^3) clauses.
    """
    sink = Formula() if sink is None else sink
    _t_definitions(inst, sink)
    for (i, j), x in inst.x.items():
        for pos in range(i, j + 1):
            sink.add_clause((-x, inst.t[pos]))
    return sink


def encode_ipt(inst, sink=None):
    """
    Interval propagation trick: the t definitions plus the z ladder

        (-x(i,j) | z(i,j))
        (-z(i,i+1) | t(i)), (-z(i,i+1) | t(i+1))
        (-z(i,j) | z(i+1,j)), (-z(i,j) | z(i,j-1))                  for j >= i + 2
        (-z(i,j) | x(i,j) | z(i-1,j) | z(i,j+1))                    out-of-range z dropped

    Under any assignment of x and t, the result is satisfiable iff the assignment satisfies the
    naive propagation, using at most 6 n^2 clauses.

    Args:
        inst (IptInstance): Variables of the instance.
        sink (Formula): Clause sink.

    Returns:
        The sink.
    """
    sink = Formula() if sink is None else sink
    n, x, t, z = inst.n, inst.x, inst.t, inst.z
    _t_definitions(inst, sink)
    for (i, j), zv in z.items():
        sink.add_clause((-x[(i, j)], zv))
        if j == i + 1:
            sink.add_clause((-zv, t[i]))
            sink.add_clause((-zv, t[j]))
        else:
            sink.add_clause((-zv, z[(i + 1, j)]))
            sink.add_clause((-zv, z[(i, j - 1)]))
        widening = [-zv, x[(i, j)]]
        if i > 1:
            widening.append(z[(i - 1, j)])
        if j < n:
            widening.append(z[(i, j + 1)])
        sink.add_clause(widening)
    return sink


class BlockRule(str, Enum):
    """How a level of the recursive encoder picks its blocks when k and b are not given."""
    LOG_COUNT = "log-count"  # k = max(2, floor(lg n)) blocks
    LOG_SIZE = "log-size"    # blocks of b = max(2, ceil(lg n) - 1) positions


def as_block_rule(value):
    try:
        return BlockRule(value)
    except ValueError:
        names = ", ".join(rule.value for rule in BlockRule)
        raise ParameterError(f"Unknown block rule {value!r}, expected one of {names}")


@dataclass
class BlockEncoderParams:
    """
    Parameters of the recursive encoder. Without overrides k = max(2, floor(lg n)) and
    b = ceil(n / k); k is then tightened to ceil(n / b) so no block is empty.

    Under ``BlockRule.LOG_SIZE`` the block size is fixed first, b = max(2, ceil(lg n) - 1). Nested
    levels inherit the rule and the recursion base.
    """
    n: int
    variant: Variant = Variant.I
    k: int = None
    b: int = None
    recursion_base: int = RECURSION_BASE
    rule: BlockRule = BlockRule.LOG_COUNT

    def __post_init__(self):
        self.variant = as_variant(self.variant)
        self.rule = as_block_rule(self.rule)
        if self.n < 1:
            raise ParameterError(f"Position count must be >= 1, got {self.n}")
        if self.recursion_base < 2:
            raise ParameterError(f"Recursion base must be >= 2, got {self.recursion_base}")
        if self.b is not None and self.b < 1:
            raise ParameterError(f"Block size must be >= 1, got {self.b}")
        if self.k is not None and self.k < 1:
            raise ParameterError(f"Block count must be >= 1, got {self.k}")

        if self.b is not None:
            if self.k is not None and self.k != math.ceil(self.n / self.b):
                raise ParameterError(f"k={self.k} and b={self.b} do not decompose n={self.n}")
        elif self.k is not None:
            self.b = math.ceil(self.n / self.k)
        elif self.rule is BlockRule.LOG_SIZE:
            self.b = max(2, (self.n - 1).bit_length() - 1)
        else:
            self.b = math.ceil(self.n / max(2, self.n.bit_length() - 1))
        self.k = math.ceil(self.n / self.b)

    @property
    def blocks(self):
        return BlockParams(self.n, self.b)

    def nested(self, n, variant):
        return BlockEncoderParams(n, variant, recursion_base=self.recursion_base, rule=self.rule)


def _lookup(n, vertex_lits):
    missing = [p for p in _pairs(n) if p not in vertex_lits]
    if missing:
        raise ParameterError(f"No literal for interval {missing[0]}")
    return lambda i, j: vertex_lits[(i, j)]


def _direct(n, variant, lit_of, sink):
    for a, b in interval_edges(n, variant):
        sink.add_clause((-lit_of(*a), -lit_of(*b)))


def _define_block_pairs(n, blocks, lit_of, sink, pool, path):
    """y(l, r) for l < r, equivalent to "a selected interval starts in block l and ends in block r"."""
    B = blocks.block
    y = {(l, r): pool.fresh(VarName("y", (l, r), path))
         for l in range(1, blocks.k + 1) for r in range(l + 1, blocks.k + 1)}
    members = defaultdict(list)
    for i, j in _pairs(n):
        if B(i) < B(j):
            x = lit_of(i, j)
            sink.add_clause((-x, y[(B(i), B(j))]))
            members[(B(i), B(j))].append(x)
    for key, yv in y.items():
        sink.add_clause([-yv] + members[key])
    return y


def _encode_boundary(n, variant, blocks, y, lit_of, sink, pool, path):
    """
    The s, f and m families, shared by both block encoders. The block IPT also carries the
    y-edges between an interval inside block d and one starting before d and ending after it.
    """
    strict = variant is Variant.I0
    B, k = blocks.block, blocks.k

    s_vars = {(i, r): pool.fresh(VarName("s", (i, r), path))
              for i in range(1, n + 1) for r in range(B(i) + 1, k + 1)}
    f_vars = {(l, j): pool.fresh(VarName("f", (l, j), path))
              for j in range(1, n + 1) for l in range(1, B(j))}
    for i, j in _pairs(n):
        if B(i) < B(j):
            x = lit_of(i, j)
            sink.add_clause((-x, s_vars[(i, B(j))]))
            sink.add_clause((-x, f_vars[(B(i), j)]))
    for (i, r), s in s_vars.items():
        sink.add_clause([-s] + [lit_of(i, j) for j in blocks.positions(r)])
    for (l, j), f in f_vars.items():
        sink.add_clause([-f] + [lit_of(i, j) for i in blocks.positions(l)])

    for d in range(1, k + 1):
        positions = blocks.positions(d)
        later = range(d + 1, k + 1)
        earlier = range(1, d)

        # intervals leaving the block towards different blocks always share two positions
        starts = [(i, r) for i in positions for r in later]
        for a in range(len(starts)):
            for c in range(a + 1, len(starts)):
                if starts[a][1] != starts[c][1]:
                    sink.add_clause((-s_vars[starts[a]], -s_vars[starts[c]]))

        for j1 in positions:
            for i2 in positions:
                if i2 < j1 or (i2 == j1 and not strict):
                    for l in earlier:
                        for r in later:
                            sink.add_clause((-f_vars[(l, j1)], -s_vars[(i2, r)]))

        if len(positions) < 2:
            continue
        inner = {(a, c): lit_of(positions[a - 1], positions[c - 1]) for a, c in _pairs(len(positions))}
        inst = IptInstance.create(len(positions), pool, x=inner, path=f"{path}/b{d}")
        encode_ipt(inst, sink)
        for local, pos in enumerate(positions, start=1):
            t = inst.t[local]
            for i in positions:
                if pos > i or (pos == i and not strict):
                    for r in later:
                        sink.add_clause((-t, -s_vars[(i, r)]))
            for j in positions:
                if pos < j or (pos == j and not strict):
                    for l in earlier:
                        sink.add_clause((-t, -f_vars[(l, j)]))
            for l in earlier:
                for r in later:
                    sink.add_clause((-t, -y[(l, r)]))


def _encode_recursive(params, lit_of, sink, pool, path):
    n, variant = params.n, params.variant
    if n <= params.recursion_base or 2 * params.b >= n:
        _direct(n, variant, lit_of, sink)
        return
    blocks = params.blocks
    k = blocks.k
    logger.debug(f"Recursing at {path or '/'}: n={n} k={k} b={blocks.b} variant={variant.value}")

    for l in range(1, k + 1):
        for r in range(l, k + 1):
            merged = blocks.positions(l) if l == r else blocks.positions(l) + blocks.positions(r)
            if len(merged) < 2:
                continue
            sub = params.nested(len(merged), variant)
            _encode_recursive(sub, lambda a, c, merged=merged: lit_of(merged[a - 1], merged[c - 1]),
                              sink, pool, f"{path}/x{l}-{r}")

    y = _define_block_pairs(n, blocks, lit_of, sink, pool, path)
    sub = params.nested(k, Variant.I0)
    _encode_recursive(sub, lambda l, r: y[(l, r)], sink, pool, f"{path}/y")

    _encode_boundary(n, variant, blocks, y, lit_of, sink, pool, path)


def encode_interval_isp_recursive(params, vertex_lits, pool, sink=None, path=""):
    """
    Recursive block encoding of the independent-set property of I_n / I_n^0, within
    26 n^2 lg n clauses.

    Args:
        params (BlockEncoderParams): Size, variant and top-level block decomposition. Nested
            levels use the default decomposition.
        vertex_lits (dict): (i, j) -> literal, for every interval of 1..n.
        pool (VarMap): Allocates the auxiliary variables.
        sink (Formula or ClauseCounter): Clause sink.
        path (str): Prefix of the auxiliary variable paths; distinct calls sharing a pool need
            distinct prefixes.

    Returns:
        The sink.
    """
    lit_of = _lookup(params.n, vertex_lits)
    sink = Formula() if sink is None else sink
    _encode_recursive(params, lit_of, sink, pool, path)
    logger.info(f"Recursive interval encoding of {params.variant.value}_{params.n} "
                f"(k={params.k}, b={params.b}): {len(sink)} clauses")
    return sink


def _block83_count(n):
    # smallest k with k^3 >= n^2, i.e. ceil(n^(2/3)) without floating point
    k = 1
    while k ** 3 < n * n:
        k += 1
    return k


def encode_interval_isp_block83(n, variant, vertex_lits, pool, sink=None, path="",
                                direct_threshold=BLOCK83_DIRECT_THRESHOLD):
    """
    One-level block encoding with about n^(2/3) blocks of size n^(1/3), O(n^(8/3)) clauses.

    x-edges are written pairwise inside every block pair and y-edges pairwise between the block
    pair variables; the s, f and m families are those of the recursive encoder.

    Args:
        n (int): Number of positions (>= 2).
        variant (Variant): ``I`` or ``I0``.
        vertex_lits (dict): (i, j) -> literal, for every interval of 1..n.
        pool (VarMap): Allocates the auxiliary variables.
        sink (Formula or ClauseCounter): Clause sink.
        path (str): Prefix of the auxiliary variable paths.
        direct_threshold (int): Up to this many positions the direct encoding is used.

    Returns:
        The sink.
    """
    variant = as_variant(variant)
    if n < 2:
        raise ParameterError(f"Interval graphs need n >= 2, got {n}")
    lit_of = _lookup(n, vertex_lits)
    sink = Formula() if sink is None else sink
    if n <= direct_threshold:
        _direct(n, variant, lit_of, sink)
        return sink

    blocks = BlockParams(n, math.ceil(n / _block83_count(n)))
    B = blocks.block
    groups = defaultdict(list)
    for i, j in _pairs(n):
        groups[(B(i), B(j))].append(Interval(i, j))
    for members in groups.values():
        for a in range(len(members)):
            for c in range(a + 1, len(members)):
                if is_edge(members[a], members[c], variant):
                    sink.add_clause((-lit_of(members[a].i, members[a].j), -lit_of(members[c].i, members[c].j)))

    y = _define_block_pairs(n, blocks, lit_of, sink, pool, path)
    for a, c in interval_edges(blocks.k, Variant.I0):
        sink.add_clause((-y[a], -y[c]))

    _encode_boundary(n, variant, blocks, y, lit_of, sink, pool, path)
    logger.info(f"Block83 interval encoding of {variant.value}_{n} (k={blocks.k}, b={blocks.b}): {len(sink)} clauses")
    return sink
