"""
Clause sets over DIMACS literals.

A literal is a non-zero signed integer: ``v`` is the positive literal of variable ``v`` and ``-v``
its complement. A clause is stored as a tuple of literals sorted by (variable, polarity), which makes
syntactically equal clauses compare equal and gives formulas set semantics.
"""
import logging

from coverenc.exceptions import ClauseError, TautologyError

logger = logging.getLogger(__name__)


def make_literal(var, positive=True):
    """
    Build the literal of a variable.

    Args:
        var (int): Variable index (>= 1).
        positive (bool): Polarity.

    Returns:
        int: The signed literal.
    """
    if var < 1:
        raise ClauseError(f"Variable index must be >= 1, got {var}")
    return var if positive else -var


def var_of(lit):
    return abs(lit)


def is_positive(lit):
    return lit > 0


def negate(lit):
    return -lit


def literal_key(lit):
    return abs(lit), lit < 0


def make_clause(literals):
    """
    Canonicalise a collection of literals into a clause.

    Duplicate literals collapse. A complementary pair is rejected rather than dropped so that a
    faulty encoder surfaces immediately.

    Args:
        literals (iterable): Signed integer literals.

    Returns:
        tuple: The sorted clause.
    """
    lits = set()
    for lit in literals:
        if not isinstance(lit, int) or isinstance(lit, bool) or lit == 0:
            raise ClauseError(f"Invalid literal: {lit!r}")
        if -lit in lits:
            raise TautologyError(f"Clause contains complementary literals {abs(lit)} and {-abs(lit)}")
        lits.add(lit)
    return tuple(sorted(lits, key=literal_key))


def clause_key(clause):
    return tuple(literal_key(lit) for lit in clause)


class Formula:
    """
    A set of clauses with a running maximum variable index.
    """

    def __init__(self, clauses=(), max_var=0):
        self._clauses = set()
        self.max_var = max_var
        for clause in clauses:
            self.add_clause(clause)

    def add_clause(self, literals):
        """
        Add a clause; adding a clause already present is a no-op.

        Args:
            literals (iterable): Literals of the clause.

        Returns:
            tuple: The canonical clause.
        """
        clause = make_clause(literals)
        self._clauses.add(clause)
        if clause:
            self.max_var = max(self.max_var, abs(clause[-1]))
        return clause

    def extend(self, clauses):
        for clause in clauses:
            self.add_clause(clause)
        return self

    def remove_clause(self, literals):
        self._clauses.discard(make_clause(literals))

    def variables(self):
        return {abs(lit) for clause in self._clauses for lit in clause}

    def sorted_clauses(self):
        return sorted(self._clauses, key=clause_key)

    def copy(self):
        other = Formula(max_var=self.max_var)
        other._clauses = set(self._clauses)
        return other

    def has_empty_clause(self):
        return () in self._clauses

    @property
    def clauses(self):
        return frozenset(self._clauses)

    @property
    def size(self):
        return len(self._clauses)

    def __len__(self):
        return len(self._clauses)

    def __iter__(self):
        return iter(self.sorted_clauses())

    def __contains__(self, literals):
        try:
            return make_clause(literals) in self._clauses
        except (ClauseError, TautologyError):
            return False

    def __or__(self, other):
        union = self.copy()
        union._clauses |= set(other.clauses)
        union.max_var = max(self.max_var, other.max_var)
        return union

    def __eq__(self, other):
        if not isinstance(other, Formula):
            return NotImplemented
        return self._clauses == other._clauses

    def __repr__(self):
        return f"Formula(clauses={len(self._clauses)}, max_var={self.max_var})"


class ClauseCounter:
    """
    Clause sink with the same ``add_clause`` surface as Formula that only counts.

    Duplicates are counted each time they are emitted, so ``size`` is an upper bound on the
    size of the equivalent Formula.
    """

    def __init__(self):
        self.size = 0
        self.max_var = 0

    def add_clause(self, literals):
        clause = make_clause(literals)
        self.size += 1
        if clause:
            self.max_var = max(self.max_var, abs(clause[-1]))
        return clause

    def extend(self, clauses):
        for clause in clauses:
            self.add_clause(clause)
        return self

    def __len__(self):
        return self.size


def restrict(formula, assignment):
    """
    Apply a partial assignment: satisfied clauses vanish, falsified literals are removed.

    Args:
        formula (Formula): Input formula.
        assignment (dict): Variable index -> bool.

    Returns:
        Formula: F restricted by the assignment. A falsified clause becomes the empty clause.
    """
    restricted = Formula(max_var=formula.max_var)
    for clause in formula.clauses:
        kept = []
        satisfied = False
        for lit in clause:
            value = assignment.get(abs(lit))
            if value is None:
                kept.append(lit)
            elif value == (lit > 0):
                satisfied = True
                break
        if not satisfied:
            restricted._clauses.add(tuple(kept))
    return restricted


def evaluate(formula, assignment):
    """
    Check whether a total assignment over the formula's variables satisfies it.
    """
    return all(any(assignment.get(abs(lit)) == (lit > 0) for lit in clause) for clause in formula.clauses)
