"""
Complete DPLL procedure for desk-scale formulas.

Unit propagation runs on two watched literals; search backtracks chronologically and branches on
the lowest unassigned variable, trying false first. Literals whose variable occurs with a single
polarity in the whole formula are fixed at the root unless an assumption mentions them.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

logger = logging.getLogger(__name__)


class SatStatus(Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"


@dataclass
class SatResult:
    status: SatStatus
    model: dict = field(default=None)

    @property
    def satisfiable(self):
        return self.status is SatStatus.SAT


def _assumption_literals(assumptions):
    if assumptions is None:
        return []
    if isinstance(assumptions, dict):
        return [var if value else -var for var, value in assumptions.items()]
    return list(assumptions)


class DpllSolver:
    """
    Reusable solver for one formula; each ``solve`` call starts from the root with its own
    assumptions, which is equivalent to solving the formula restricted by them.
    """

    def __init__(self, formula):
        self.num_vars = formula.max_var
        self.empty_clause = False
        self.units = []
        self.clauses = []
        self.watches = defaultdict(list)

        polarity = {}
        occurring = set()
        for clause in formula.sorted_clauses():
            for lit in clause:
                occurring.add(abs(lit))
                polarity[abs(lit)] = polarity.get(abs(lit), 0) | (1 if lit > 0 else 2)
            if not clause:
                self.empty_clause = True
            elif len(clause) == 1:
                self.units.append(clause[0])
            else:
                index = len(self.clauses)
                self.clauses.append(list(clause))
                self.watches[clause[0]].append(index)
                self.watches[clause[1]].append(index)

        self.order = sorted(occurring)
        self.pure = [var if mask == 1 else -var for var, mask in sorted(polarity.items()) if mask != 3]
        self.values = []
        self.trail = []
        self.qhead = 0

    def _value(self, lit):
        value = self.values[abs(lit)]
        if value is None:
            return None
        return value == (lit > 0)

    def _assign(self, lit):
        self.values[abs(lit)] = lit > 0
        self.trail.append(lit)

    def _enqueue(self, lit):
        """Assign lit unless it is already true. Returns False on a conflict."""
        value = self._value(lit)
        if value is None:
            self._assign(lit)
            return True
        return value

    def _propagate(self):
        """Propagate the trail from qhead. Returns True when a conflict was found."""
        while self.qhead < len(self.trail):
            false_lit = -self.trail[self.qhead]
            self.qhead += 1
            watchers = self.watches[false_lit]
            kept = []
            conflict = False
            for position, index in enumerate(watchers):
                if conflict:
                    kept.extend(watchers[position:])
                    break
                clause = self.clauses[index]
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], clause[0]
                if self._value(clause[0]) is True:
                    kept.append(index)
                    continue
                for k in range(2, len(clause)):
                    if self._value(clause[k]) is not False:
                        clause[1], clause[k] = clause[k], clause[1]
                        self.watches[clause[1]].append(index)
                        break
                else:
                    kept.append(index)
                    if self._value(clause[0]) is False:
                        conflict = True
                    else:
                        self._assign(clause[0])
            self.watches[false_lit] = kept
            if conflict:
                return True
        return False

    def _undo(self, position):
        for lit in self.trail[position:]:
            self.values[abs(lit)] = None
        del self.trail[position:]
        self.qhead = position

    def solve(self, assumptions=None):
        """
        Decide satisfiability under assumptions.

        Args:
            assumptions (dict or iterable): Variable -> bool, or a list of literals.

        Returns:
            SatResult: SAT with a total model over all variables, or UNSAT.
        """
        assumed = _assumption_literals(assumptions)
        top = max([self.num_vars] + [abs(lit) for lit in assumed])
        self.values = [None] * (top + 1)
        self.trail = []
        self.qhead = 0

        if self.empty_clause:
            return SatResult(SatStatus.UNSAT)
        for lit in self.units + assumed:
            if not self._enqueue(lit):
                return SatResult(SatStatus.UNSAT)
        assumed_vars = {abs(lit) for lit in assumed}
        for lit in self.pure:
            if abs(lit) not in assumed_vars and self.values[abs(lit)] is None:
                self._assign(lit)
        if self._propagate():
            return SatResult(SatStatus.UNSAT)

        # each decision is (trail position, literal, flipped)
        decisions = []
        cursor = 0
        while True:
            while cursor < len(self.order) and self.values[self.order[cursor]] is not None:
                cursor += 1
            if cursor == len(self.order):
                return SatResult(SatStatus.SAT, self._model(top))

            lit = -self.order[cursor]
            decisions.append((len(self.trail), lit, False))
            self._assign(lit)
            while self._propagate():
                cursor = 0
                while decisions and decisions[-1][2]:
                    decisions.pop()
                if not decisions:
                    return SatResult(SatStatus.UNSAT)
                position, lit, _ = decisions.pop()
                self._undo(position)
                decisions.append((position, -lit, True))
                self._assign(-lit)

    def _model(self, top):
        model = {var: bool(self.values[var]) for var in range(1, top + 1)}
        for clause in self.clauses:
            if not any(model[abs(lit)] == (lit > 0) for lit in clause):
                raise RuntimeError(f"Solver produced a model violating clause {clause}")
        for lit in self.units:
            if model[abs(lit)] != (lit > 0):
                raise RuntimeError(f"Solver produced a model violating unit {lit}")
        return model


def solve(formula, assumptions=None):
    """
    Solve a formula once.

    Args:
        formula (Formula): Formula to decide.
        assumptions (dict or iterable): Optional assumptions.

    Returns:
        SatResult: The verdict and a verified model when satisfiable.
    """
    result = DpllSolver(formula).solve(assumptions)
    logger.debug(f"Solved formula with {len(formula)} clauses: {result.status.value}")
    return result
