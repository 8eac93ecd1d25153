"""
Idealized bounded variable addition (BVA).

A grid product L x Gamma is the clause set { gamma + (l) : l in L, gamma in Gamma }. When it occurs
in a formula it can be replaced by (-y | l) for l in L and (y | gamma) for gamma in Gamma with a
fresh y, which trades |L| * |Gamma| clauses for |L| + |Gamma|. Resolving the new clauses on y gives
back the grid product, so satisfiability over the original variables is preserved.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass

from coverenc import config as cfg
from coverenc.cnf.formula import Formula, clause_key, literal_key, make_clause
from coverenc.encoders.amo import amo_pairwise, check_request
from coverenc.exceptions import GridProductError, ParameterError, TautologyError

# config
config = cfg.load_config()

MIN_GAIN = config["bva"]["min_gain"]  # Smallest clause reduction worth a new variable
MAX_STEPS = config["bva"]["max_steps"]  # Safety cap on the number of replacements

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridProduct:
    lits: tuple
    gamma: tuple

    @classmethod
    def of(cls, lits, gamma):
        try:
            lits = make_clause(lits)
            gamma = tuple(sorted({make_clause(g) for g in gamma}, key=clause_key))
        except TautologyError as e:
            raise GridProductError(f"Invalid grid product: {e}")
        return cls(lits, gamma)

    @property
    def gain(self):
        return len(self.lits) * len(self.gamma) - len(self.lits) - len(self.gamma)

    def expand(self):
        """
        The |L| * |Gamma| clauses of the product.

        Returns:
            set: Canonical clauses.
        """
        expansion = set()
        for lit in self.lits:
            for g in self.gamma:
                if lit in g:
                    raise GridProductError(f"Literal {lit} already occurs in {g}")
                try:
                    expansion.add(make_clause(g + (lit,)))
                except TautologyError:
                    raise GridProductError(f"Literal {lit} with {g} makes a tautology")
        if len(expansion) != len(self.lits) * len(self.gamma):
            raise GridProductError("Grid product clauses collide")
        return expansion


@dataclass
class BvaStep:
    lits_count: int
    gamma_count: int
    gain: int
    new_var: int

    def __str__(self):
        return f"|L|={self.lits_count} |Gamma|={self.gamma_count} gain={self.gain} var={self.new_var}"


def bva_step(formula, product, pool):
    """
    Replace a grid product occurring in the formula.

    Args:
        formula (Formula): Formula containing the product's expansion.
        product (GridProduct): The product to replace.
        pool (VarMap): Allocates the new variable.

    Returns:
        Formula: The rewritten formula; the input is left untouched.
    """
    expansion = product.expand()
    missing = expansion - formula.clauses
    if missing:
        raise GridProductError(f"{len(missing)} clauses of the grid product are not in the formula")

    y = pool.fresh_aux("bva")
    rewritten = formula.copy()
    for clause in expansion:
        rewritten.remove_clause(clause)
    for lit in product.lits:
        rewritten.add_clause((-y, lit))
    for g in product.gamma:
        rewritten.add_clause((y,) + g)

    expected = len(formula) - len(expansion) + len(product.lits) + len(product.gamma)
    if len(rewritten) != expected:
        raise GridProductError(f"Replacement produced {len(rewritten)} clauses, expected {expected}")
    return rewritten


def find_grid_product(formula):
    """
    Search the grid product of largest gain.

    Every literal seeds a greedy growth: starting from L = {seed} and Gamma = all subclauses
    completing the seed to a clause of the formula, literals sharing the most subclauses are added
    to L while at least two subclauses remain. Ties go to the lexicographically smallest literal or
    seed.

    Returns:
        GridProduct or None: The best product with positive gain.
    """
    # partners[gamma] = literals l such that gamma + (l) is a clause of the formula
    partners = defaultdict(set)
    by_literal = defaultdict(set)
    for clause in formula.clauses:
        for position, lit in enumerate(clause):
            rest = clause[:position] + clause[position + 1:]
            partners[rest].add(lit)
            by_literal[lit].add(rest)

    best, best_gain = None, 0
    for seed in sorted(by_literal, key=literal_key):
        lits = [seed]
        gamma = set(by_literal[seed])
        while len(gamma) >= 2:
            counts = defaultdict(int)
            for g in gamma:
                for lit in partners[g]:
                    counts[lit] += 1
            candidates = [lit for lit in counts if lit not in lits and -lit not in lits and counts[lit] >= 2]
            if not candidates:
                break
            chosen = min(candidates, key=lambda lit: (-counts[lit], literal_key(lit)))
            lits.append(chosen)
            gamma = {g for g in gamma if chosen in partners[g]}
            gain = len(lits) * len(gamma) - len(lits) - len(gamma)
            if gain > best_gain:
                best_gain = gain
                best = GridProduct.of(lits, gamma)
    return best


class BvaReencoder:
    """
    Repeatedly replaces the best grid product until no replacement gains at least ``min_gain``
    clauses. Variables introduced by earlier steps take part in later products.
    """

    def __init__(self, min_gain=MIN_GAIN, max_steps=MAX_STEPS):
        self.min_gain = min_gain
        self.max_steps = max_steps
        self.steps = []

    def reencode(self, formula, pool):
        """
        Args:
            formula (Formula): Input formula.
            pool (VarMap): Allocates the new variables; must already cover the formula's variables.

        Returns:
            Formula: The re-encoded formula.
        """
        self.steps = []
        current = formula
        while len(self.steps) < self.max_steps:
            product = find_grid_product(current)
            if product is None or product.gain < self.min_gain:
                break
            current = bva_step(current, product, pool)
            step = BvaStep(len(product.lits), len(product.gamma), product.gain, pool.top)
            self.steps.append(step)
            logger.info(f"BVA step {len(self.steps)}: {step}")
        logger.info(f"BVA re-encoding: {len(formula)} -> {len(current)} clauses in {len(self.steps)} steps")
        return current


def bva_reencode(formula, pool, max_steps=MAX_STEPS, min_gain=MIN_GAIN):
    return BvaReencoder(min_gain=min_gain, max_steps=max_steps).reencode(formula, pool)


def amo_bva_construct(literals, pool, sink=None):
    """
    At-most-one with exactly 3n - 6 clauses, as obtained by BVA from the pairwise encoding.

    While more than four literals remain, the first three get their pairwise clauses and a fresh y
    with (-y | -l) for each of them, and the request continues on (-y, l4, ..., ln).

    Args:
        literals (iterable): At least three literals.
        pool (VarMap): Allocates the y variables.
        sink (Formula): Clause sink.

    Returns:
        The sink.
    """
    literals = check_request(literals)
    if len(literals) < 3:
        raise ParameterError(f"The BVA at-most-one construction needs n >= 3, got {len(literals)}")
    sink = Formula() if sink is None else sink
    while len(literals) > 4:
        head, rest = literals[:3], literals[3:]
        amo_pairwise(head, sink)
        y = pool.fresh_aux("bva")
        for lit in head:
            sink.add_clause((-y, -lit))
        literals = [-y] + rest
    amo_pairwise(literals, sink)
    return sink
