from coverenc.cnf.formula import Formula
from coverenc.exceptions import FormatError


def to_dimacs(formula, varmap=None):
    """
    Render a formula as DIMACS CNF with clauses in canonical sorted order.

    Args:
        formula (Formula): Formula to write.
        varmap (VarMap): Optional map; its top index widens the header so that every
            allocated variable is declared.

    Returns:
        str: The DIMACS text.
    """
    max_var = formula.max_var
    if varmap is not None:
        max_var = max(max_var, varmap.top)
    lines = [f"p cnf {max_var} {len(formula)}\n"]
    for clause in formula.sorted_clauses():
        lines.append(" ".join(str(lit) for lit in clause + (0,)) + "\n")
    return "".join(lines)


def parse_dimacs(text):
    """
    Parse DIMACS CNF text. Comment lines starting with ``c`` are skipped.

    Args:
        text (str): DIMACS contents.

    Returns:
        Formula: The parsed formula, with max_var taken from the header.
    """
    header = None
    clauses = []
    current = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("p"):
            parts = stripped.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"Line {line_number}: bad header {stripped!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError(f"Line {line_number}: bad header {stripped!r}")
            continue
        if header is None:
            raise FormatError(f"Line {line_number}: clause before 'p cnf' header")
        for token in stripped.split():
            try:
                lit = int(token)
            except ValueError:
                raise FormatError(f"Line {line_number}: bad literal {token!r}")
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                if abs(lit) > header[0]:
                    raise FormatError(f"Line {line_number}: literal {lit} exceeds declared {header[0]} variables")
                current.append(lit)

    if header is None:
        raise FormatError("Missing 'p cnf' header")
    if current:
        raise FormatError("Last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise FormatError(f"Header declares {header[1]} clauses, found {len(clauses)}")

    formula = Formula(max_var=header[0])
    for clause in clauses:
        formula.add_clause(clause)
    return formula
