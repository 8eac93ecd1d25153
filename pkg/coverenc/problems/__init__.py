from .reductions import (Strategy, as_strategy, encode_clique, encode_coloring, encode_independent_set, encode_isp,
                         encode_vertex_cover)
from .scheduling import (SchedulingInstance, Task, brute_force_schedule, decode_schedule, dump_instance,
                         encode_scheduling, is_valid_schedule, load_instance)
