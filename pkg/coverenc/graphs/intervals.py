"""
Complete discrete interval graphs and their block decomposition.

I_n has a vertex for every interval [i, j] with 1 <= i < j <= n and an edge between intervals
sharing at least one position. I_n^0 (variant ``I0``) only joins intervals sharing at least two
positions, so intervals that merely touch are compatible.

Under block size b, position i lies in block B(i) = ceil(i / b). Every edge with i1 <= i2 falls in
exactly one class:

    x   B(i1) = B(i2) and B(j1) = B(j2)
    y   B(i1) < B(i2) < B(j1)
    s   B(i1) = B(i2) and B(j1) != B(j2)
    f   B(i1) < B(i2) = B(j1) = B(j2)
    m   B(i1) < B(i2) = B(j1) != B(j2)

The x, s, f and m cases additionally need i2 <= j1, or i2 < j1 for I0.
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum

from coverenc.exceptions import ParameterError
from coverenc.graphs.graph import Graph

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    I = "I"
    I0 = "I0"

    @property
    def min_overlap(self):
        return 1 if self is Variant.I else 2


def as_variant(value):
    try:
        return Variant(value)
    except ValueError:
        raise ParameterError(f"Unknown interval variant {value!r}, expected 'I' or 'I0'")


class EdgeClass(str, Enum):
    X = "x"
    Y = "y"
    S = "s"
    F = "f"
    M = "m"


@dataclass(frozen=True, order=True)
class Interval:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ParameterError(f"Invalid interval [{self.i}, {self.j}]")

    def overlap(self, other):
        return max(0, min(self.j, other.j) - max(self.i, other.i) + 1)

    def contains(self, position):
        return self.i <= position <= self.j

    def __str__(self):
        return f"[{self.i},{self.j}]"


@dataclass(frozen=True)
class BlockParams:
    """
    Block decomposition of positions 1..n into k blocks of size b (the last one possibly shorter).
    """
    n: int
    b: int

    def __post_init__(self):
        if self.b < 1:
            raise ParameterError(f"Block size must be >= 1, got {self.b}")
        if self.n < 1:
            raise ParameterError(f"Position count must be >= 1, got {self.n}")

    @classmethod
    def with_block_count(cls, n, k):
        if k < 1:
            raise ParameterError(f"Block count must be >= 1, got {k}")
        return cls(n, math.ceil(n / k))

    @property
    def k(self):
        return math.ceil(self.n / self.b)

    def block(self, position):
        return (position - 1) // self.b + 1

    def positions(self, d):
        """Positions of block d, in order."""
        return list(range((d - 1) * self.b + 1, min(d * self.b, self.n) + 1))


def is_edge(a, b, variant=Variant.I):
    """Whether two distinct intervals are adjacent in I_n (or I_n^0)."""
    return a != b and a.overlap(b) >= Variant(variant).min_overlap


def intervals_of(n):
    """All intervals [i, j] with 1 <= i < j <= n in lexicographic order."""
    return [Interval(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def interval_edges(n, variant=Variant.I):
    """
    Generate the edges of I_n / I_n^0 as pairs of (i, j) tuples, the first one lexicographically smaller.
    """
    strict = Variant(variant) is Variant.I0
    for i1 in range(1, n + 1):
        for j1 in range(i1 + 1, n + 1):
            for j2 in range(j1 + 1, n + 1):
                yield (i1, j1), (i1, j2)
            last_start = j1 - 1 if strict else j1
            for i2 in range(i1 + 1, last_start + 1):
                for j2 in range(i2 + 1, n + 1):
                    yield (i1, j1), (i2, j2)


def count_interval_edges(n, variant=Variant.I):
    """
    Edge count of I_n / I_n^0: all pairs minus disjoint pairs, minus touching pairs for I0.
    """
    if n < 2:
        return 0
    pairs = math.comb(math.comb(n, 2), 2)
    count = pairs - math.comb(n, 4)
    if Variant(variant) is Variant.I0:
        count -= math.comb(n, 3)
    return count


def build_interval_graph(n, variant=Variant.I):
    """
    Build I_n or I_n^0 with vertices numbered in lexicographic interval order.

    Args:
        n (int): Number of positions (>= 2).
        variant (Variant): ``I`` or ``I0``.

    Returns:
        Graph: Vertices labelled (i, j).
    """
    if n < 2:
        raise ParameterError(f"Interval graphs need n >= 2, got {n}")
    variant = as_variant(variant)
    intervals = intervals_of(n)
    index = {(iv.i, iv.j): v for v, iv in enumerate(intervals, start=1)}
    labels = {v: (iv.i, iv.j) for v, iv in enumerate(intervals, start=1)}
    edges = [(index[a], index[b]) for a, b in interval_edges(n, variant)]
    graph = Graph(len(intervals), edges, labels=labels, interval_info=(n, variant))
    logger.debug(f"Built interval graph {variant.value}_{n}: {graph.n} vertices, {graph.num_edges} edges")
    return graph


def _as_interval(value):
    return value if isinstance(value, Interval) else Interval(*value)


def _normalise(a, b):
    a, b = _as_interval(a), _as_interval(b)
    return (a, b) if a <= b else (b, a)


def edge_class_conditions(a, b, params, variant=Variant.I):
    """
    Evaluate the five class conditions independently of each other.

    Args:
        a, b (Interval or tuple): The two intervals, in any order.
        params (BlockParams): Block decomposition.
        variant (Variant): Strictness of the i2 <= j1 guards.

    Returns:
        dict: EdgeClass -> bool.
    """
    first, second = _normalise(a, b)
    i1, j1, i2, j2 = first.i, first.j, second.i, second.j
    B = params.block
    meets = i2 < j1 if Variant(variant) is Variant.I0 else i2 <= j1
    return {
        EdgeClass.X: B(i1) == B(i2) and B(j1) == B(j2) and meets,
        EdgeClass.Y: B(i1) < B(i2) < B(j1),
        EdgeClass.S: B(i1) == B(i2) and meets and B(j1) != B(j2),
        EdgeClass.F: B(i1) < B(i2) == B(j1) == B(j2) and meets,
        EdgeClass.M: B(i1) < B(i2) == B(j1) != B(j2) and meets,
    }


def classify_edge(a, b, params, variant=Variant.I):
    """
    Classify an edge of I_n / I_n^0 with the block decision tree.

    Args:
        a, b (Interval or tuple): The two intervals; order is normalised so i1 <= i2 (ties by j).
        params (BlockParams): Block decomposition.
        variant (Variant): Edge predicate of the graph.

    Returns:
        EdgeClass: The unique class of the edge.
    """
    first, second = _normalise(a, b)
    variant = as_variant(variant)
    if not is_edge(first, second, variant):
        raise ParameterError(f"{first} and {second} are not adjacent in {variant.value}")
    i1, j1, i2, j2 = first.i, first.j, second.i, second.j
    B = params.block

    if B(i1) == B(i2):
        return EdgeClass.X if B(j1) == B(j2) else EdgeClass.S
    if B(i2) < B(j1):
        return EdgeClass.Y
    # an edge forces i2 <= j1, so here B(i2) == B(j1)
    return EdgeClass.F if B(j1) == B(j2) else EdgeClass.M


def attribute_edges(n, params, variant=Variant.I):
    """
    Group every edge of I_n / I_n^0 by its class.

    Returns:
        dict: EdgeClass -> list of ((i1, j1), (i2, j2)).
    """
    groups = defaultdict(list)
    for a, b in interval_edges(n, variant):
        groups[classify_edge(a, b, params, variant)].append((a, b))
    return dict(groups)
