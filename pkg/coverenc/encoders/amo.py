import logging
import math

from coverenc import config as cfg
from coverenc.cnf.formula import Formula
from coverenc.exceptions import ParameterError

# config
config = cfg.load_config()

PRODUCT_BASE = config["amo"]["product_base"]  # Largest request handled pairwise by the product encoding

logger = logging.getLogger(__name__)


def check_request(literals):
    """
    Validate an at-most-one request: no repeated literal and no complementary pair.

    Returns:
        list: The literals as a list.
    """
    literals = list(literals)
    seen = set()
    for lit in literals:
        if lit in seen:
            raise ParameterError(f"Literal {lit} appears twice in the request")
        if -lit in seen:
            raise ParameterError(f"Request contains complementary literals {lit} and {-lit}")
        seen.add(lit)
    return literals


def amo_pairwise(literals, sink=None):
    """
    Pairwise at-most-one: a binary clause for every pair of literals.

    Args:
        literals (iterable): Literals of the request.
        sink (Formula): Clause sink, a new Formula when None.

    Returns:
        The sink, holding C(n, 2) clauses more.
    """
    literals = check_request(literals)
    sink = Formula() if sink is None else sink
    for a in range(len(literals)):
        for b in range(a + 1, len(literals)):
            sink.add_clause((-literals[a], -literals[b]))
    return sink


def amo_product(literals, pool, sink=None, base=PRODUCT_BASE, path=""):
    """
    Product at-most-one. The literals are laid out row-major on a grid with ceil(sqrt(n)) columns;
    each literal implies its row and its column selector, and at-most-one is imposed recursively on
    the row selectors and on the column selectors. Requests of at most ``base`` literals fall back
    to the pairwise encoding.

    Args:
        literals (iterable): Literals of the request.
        pool (VarMap): Allocates the selector variables.
        sink (Formula): Clause sink, a new Formula when None.
        base (int): Pairwise threshold.
        path (str): Recorded in the names of the selector variables.

    Returns:
        The sink.
    """
    literals = check_request(literals)
    sink = Formula() if sink is None else sink
    _product(literals, pool, sink, max(base, 1), path)
    return sink


def _product(literals, pool, sink, base, path):
    n = len(literals)
    if n <= base:
        amo_pairwise(literals, sink)
        return
    columns = math.isqrt(n - 1) + 1
    rows = math.ceil(n / columns)
    row_vars = [pool.fresh_aux("amo-row", path) for _ in range(rows)]
    col_vars = [pool.fresh_aux("amo-col", path) for _ in range(columns)]
    for position, lit in enumerate(literals):
        sink.add_clause((-lit, row_vars[position // columns]))
        sink.add_clause((-lit, col_vars[position % columns]))
    _product(row_vars, pool, sink, base, path)
    _product(col_vars, pool, sink, base, path)


def _negate(part):
    return (not part) if isinstance(part, bool) else -part


def _emit(sink, *parts):
    # True parts satisfy the clause, False parts drop out
    clause = []
    for part in parts:
        if part is True:
            return
        if part is False:
            continue
        clause.append(part)
    sink.add_clause(clause)


def cardinality_equals_k(literals, k, pool, sink=None, path=""):
    """
    Exactly-k over literals with a sequential unary counter.

    Counter variable r(i, j) holds iff at least j of the first i literals are true; it is defined
    by full equivalences for j <= min(i, k + 1), giving O(n k) clauses.

    Args:
        literals (list): Literals to count.
        k (int): Required number of true literals, 0 <= k <= n.
        pool (VarMap): Allocates the counter variables.
        sink (Formula): Clause sink, a new Formula when None.
        path (str): Recorded in the names of the counter variables.

    Returns:
        The sink.
    """
    literals = check_request(literals)
    n = len(literals)
    if not 0 <= k <= n:
        raise ParameterError(f"Cardinality {k} outside [0, {n}]")
    sink = Formula() if sink is None else sink

    # previous[j] is r(i - 1, j); constants stand for the trivially known values
    previous = [True] + [False] * (k + 1)
    for i, lit in enumerate(literals, start=1):
        current = [True] + [False] * (k + 1)
        for j in range(1, min(i, k + 1) + 1):
            r = pool.fresh_aux("card", path)
            current[j] = r
            _emit(sink, _negate(previous[j]), r)
            _emit(sink, -lit, _negate(previous[j - 1]), r)
            _emit(sink, -r, previous[j], lit)
            _emit(sink, -r, previous[j], previous[j - 1])
        previous = current

    _emit(sink, previous[k])
    if k + 1 <= n:
        _emit(sink, _negate(previous[k + 1]))
    logger.debug(f"Cardinality {k} of {n} literals encoded")
    return sink
