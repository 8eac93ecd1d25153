from .solver import DpllSolver, SatResult, SatStatus, solve
from .checker import (EXHAUSTIVE, SAMPLED, Verdict, base_variables, check_equisat, check_isp_encoding,
                      enumerate_independent_sets, realized_conflicts)
