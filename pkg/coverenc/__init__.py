# coverenc: constraint-to-CNF compilation with covering, BVA and interval encodings

from . import config
from .cnf import Formula, VarMap, VarName, to_dimacs
from .graphs import Graph, build_interval_graph
from .oracle import check_isp_encoding, solve
from .problems import Strategy, encode_independent_set, encode_scheduling
