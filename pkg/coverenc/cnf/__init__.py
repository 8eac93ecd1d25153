from .formula import (ClauseCounter, Formula, evaluate, is_positive, make_clause, make_literal, negate,
                      restrict, var_of)
from .varmap import VarMap, VarName, parse_name, read_varmap, write_varmap
from .dimacs import parse_dimacs, to_dimacs
