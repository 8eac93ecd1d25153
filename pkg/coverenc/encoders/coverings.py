"""
Clique and biclique coverings of a graph's edge set.
"""
import functools
import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from coverenc.exceptions import FormatError, InvalidCoverError, ParameterError
from coverenc.graphs.intervals import Variant, as_variant, intervals_of

logger = logging.getLogger(__name__)


def _orient(a, b):
    """Order a biclique's sides so that |A| <= |B|, ties broken by the smallest vertex."""
    a, b = tuple(sorted(a)), tuple(sorted(b))
    return (a, b) if (len(a), a) <= (len(b), b) else (b, a)


@dataclass
class CliqueCover:
    cliques: list = field(default_factory=list)

    @property
    def weight(self):
        return sum(len(clique) for clique in self.cliques)

    def covered_edges(self):
        return {(min(u, v), max(u, v)) for clique in self.cliques for u, v in itertools.combinations(clique, 2)}

    def validate(self, graph):
        """Raise InvalidCoverError unless every clique is complete and all edges are covered."""
        for clique in self.cliques:
            for u, v in itertools.combinations(clique, 2):
                if u == v or not graph.has_edge(u, v):
                    raise InvalidCoverError(f"Clique {sorted(clique)} contains non-edge ({u}, {v})")
        missing = set(graph.edges()) - self.covered_edges()
        if missing:
            raise InvalidCoverError(f"{len(missing)} edges are not covered, e.g. {min(missing)}")

    def is_valid(self, graph):
        try:
            self.validate(graph)
        except InvalidCoverError:
            return False
        return True

    def __len__(self):
        return len(self.cliques)


@dataclass
class BicliqueCover:
    bicliques: list = field(default_factory=list)

    @property
    def weight(self):
        return sum(len(a) + len(b) for a, b in self.bicliques)

    def covered_edges(self):
        return {(min(u, v), max(u, v)) for a, b in self.bicliques for u in a for v in b}

    def validate(self, graph):
        """Raise InvalidCoverError unless every A x B is made of edges and all edges are covered."""
        for a, b in self.bicliques:
            if not a or not b:
                raise InvalidCoverError("Biclique with an empty side")
            if set(a) & set(b):
                raise InvalidCoverError(f"Biclique sides {sorted(a)} and {sorted(b)} intersect")
            for u in a:
                for v in b:
                    if not graph.has_edge(u, v):
                        raise InvalidCoverError(f"Biclique {sorted(a)} x {sorted(b)} contains non-edge ({u}, {v})")
        missing = set(graph.edges()) - self.covered_edges()
        if missing:
            raise InvalidCoverError(f"{len(missing)} edges are not covered, e.g. {min(missing)}")

    def is_valid(self, graph):
        try:
            self.validate(graph)
        except InvalidCoverError:
            return False
        return True

    def __len__(self):
        return len(self.bicliques)


def greedy_clique_cover(graph):
    """
    Greedy clique covering.

    Each round seeds a clique with the smallest uncovered edge and grows it to a maximal clique,
    always adding the common neighbour with the most uncovered edges towards the clique (lowest
    index on ties).

    Args:
        graph (Graph): Graph to cover.

    Returns:
        CliqueCover: A valid covering.
    """
    adjacency = graph.adjacency_matrix()
    uncovered = adjacency.copy()
    cliques = []
    for u, v in graph.edges():
        if not uncovered[u - 1, v - 1]:
            continue
        clique = [u - 1, v - 1]
        candidates = np.flatnonzero(adjacency[u - 1] & adjacency[v - 1])
        while candidates.size:
            gains = uncovered[np.ix_(candidates, clique)].sum(axis=1)
            best = int(candidates[np.argmax(gains)])
            clique.append(best)
            candidates = candidates[adjacency[best, candidates]]
        members = np.array(clique)
        uncovered[np.ix_(members, members)] = False
        cliques.append(tuple(sorted(int(w) + 1 for w in clique)))

    logger.info(f"Greedy clique cover of {graph}: {len(cliques)} cliques, weight {sum(map(len, cliques))}")
    return CliqueCover(cliques)


def greedy_biclique_cover(graph):
    """
    Greedy biclique covering.

    Each round seeds (A, B) = ({u}, {v}) with the smallest uncovered edge, then alternately
    extends A with a vertex adjacent to all of B and B with a vertex adjacent to all of A. The
    chosen vertex covers the most new edges (lowest index on ties) and must cover at least one;
    growth stops when neither side can be extended.

    Args:
        graph (Graph): Graph to cover.

    Returns:
        BicliqueCover: A valid covering, each biclique oriented with |A| <= |B|.
    """
    adjacency = graph.adjacency_matrix()
    uncovered = adjacency.copy()
    bicliques = []
    for u, v in graph.edges():
        if not uncovered[u - 1, v - 1]:
            continue
        sides = [[u - 1], [v - 1]]
        grew = True
        while grew:
            grew = False
            for grow, other in ((0, 1), (1, 0)):
                taken = np.zeros(graph.n, dtype=bool)
                taken[sides[0] + sides[1]] = True
                candidates = np.flatnonzero(adjacency[sides[other]].all(axis=0) & ~taken)
                if not candidates.size:
                    continue
                gains = uncovered[np.ix_(candidates, sides[other])].sum(axis=1)
                if gains.max() > 0:
                    sides[grow].append(int(candidates[np.argmax(gains)]))
                    grew = True
        a, b = np.array(sides[0]), np.array(sides[1])
        uncovered[np.ix_(a, b)] = False
        uncovered[np.ix_(b, a)] = False
        bicliques.append(_orient((w + 1 for w in sides[0]), (w + 1 for w in sides[1])))

    cover = BicliqueCover(bicliques)
    logger.info(f"Greedy biclique cover of {graph}: {len(cover)} bicliques, weight {cover.weight}")
    return cover


def interval_clique_cover(n, variant=Variant.I):
    """
    Clique covering of I_n by the cliques K_k of intervals containing position k, 2 <= k <= n - 1.

    For I_n^0 the cliques are the intervals containing both k and k + 1, 1 <= k <= n - 1, since
    adjacent intervals there share at least two consecutive positions.
    Vertex numbers follow ``build_interval_graph`` (lexicographic interval order).
    """
    if n < 3:
        raise ParameterError(f"Interval clique cover needs n >= 3, got {n}")
    index = {(iv.i, iv.j): v for v, iv in enumerate(intervals_of(n), start=1)}
    if as_variant(variant) is Variant.I0:
        cliques = [tuple(index[(i, j)] for i in range(1, k + 1) for j in range(k + 1, n + 1))
                   for k in range(1, n)]
    else:
        cliques = [tuple(index[(i, j)] for i in range(1, k + 1) for j in range(max(k, i + 1), n + 1))
                   for k in range(2, n)]
    return CliqueCover([tuple(sorted(clique)) for clique in cliques])


def kn_recursive_biclique_cover(n):
    """
    Biclique covering of K_n by recursive halving: split the vertices into L (the first
    ceil(m/2)) and R, cover L x R, and recurse into both halves.
    """
    if n < 2:
        raise ParameterError(f"K_n covering needs n >= 2, got {n}")
    bicliques = []
    stack = [list(range(1, n + 1))]
    while stack:
        vertices = stack.pop(0)
        if len(vertices) < 2:
            continue
        half = math.ceil(len(vertices) / 2)
        left, right = vertices[:half], vertices[half:]
        bicliques.append(_orient(left, right))
        stack.extend([left, right])
    return BicliqueCover(bicliques)


@functools.lru_cache(maxsize=None)
def recursive_cover_weight(n):
    """Total weight of ``kn_recursive_biclique_cover(n)``, by its recurrence."""
    if n < 2:
        return 0
    return n + recursive_cover_weight(math.ceil(n / 2)) + recursive_cover_weight(n // 2)


def write_cover(cover):
    """Audit format: ``c v1 v2 ...`` per clique, ``b | A: ... | B: ...`` per biclique."""
    if isinstance(cover, CliqueCover):
        return "".join("c " + " ".join(map(str, clique)) + "\n" for clique in cover.cliques)
    return "".join(f"b | A: {' '.join(map(str, a))} | B: {' '.join(map(str, b))}\n" for a, b in cover.bicliques)


def read_cover(text):
    """
    Parse a cover written by ``write_cover``.

    Returns:
        CliqueCover or BicliqueCover, by the kind of lines found.
    """
    cliques, bicliques = [], []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            if stripped.startswith("c "):
                cliques.append(tuple(int(v) for v in stripped[2:].split()))
            elif stripped.startswith("b "):
                _, side_a, side_b = (part.strip() for part in stripped.split("|"))
                if not side_a.startswith("A:") or not side_b.startswith("B:"):
                    raise FormatError(f"Line {line_number}: malformed biclique {line!r}")
                bicliques.append((tuple(int(v) for v in side_a[2:].split()),
                                  tuple(int(v) for v in side_b[2:].split())))
            else:
                raise FormatError(f"Line {line_number}: unexpected {line!r}")
        except ValueError as e:
            if isinstance(e, FormatError):
                raise
            raise FormatError(f"Line {line_number}: {e}")
    if cliques and bicliques:
        raise FormatError("Cover mixes cliques and bicliques")
    return BicliqueCover(bicliques) if bicliques else CliqueCover(cliques)
