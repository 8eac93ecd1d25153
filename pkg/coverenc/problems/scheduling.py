"""
Non-preemptive scheduling of N tasks on M identical machines over the horizon 1..T.

Task i has duration d, release r and deadline e, and must run within [r, e]. Starting at t on
machine m is the variable sched-x(i,t,m), allowed for r <= t <= e - d. The task then occupies the
interval [t, t + d] of machine m, recorded by y(m,t,t+d). Intervals are made disjoint per
machine with the I0 variant, so a task may start exactly when the previous one ends.

Instance files are JSON::

    {"N": 2, "M": 1, "T": 5, "tasks": [{"d": 2, "r": 1, "e": 3}, {"d": 2, "r": 3, "e": 5}]}
"""
import json
import logging
import math
from collections import defaultdict
from dataclasses import asdict, dataclass, field

from coverenc import config as cfg
from coverenc.cnf.formula import Formula
from coverenc.cnf.varmap import VarMap, VarName
from coverenc.encoders.amo import amo_pairwise, amo_product
from coverenc.encoders.intervals import BlockEncoderParams, encode_interval_isp_recursive
from coverenc.exceptions import FormatError, ParameterError, SizeGuardError
from coverenc.graphs.intervals import Variant

# config
config = cfg.load_config()

MAX_SCHEDULE_SPACE = config["oracle"]["max_schedule_space"]  # Largest search space of the brute-force scheduler
RECURSION_BASE = config["scheduling"]["recursion_base"]  # Longest horizon encoded directly per machine
BLOCK_RULE = config["scheduling"]["block_rule"]

START_KIND = "sched-x"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Task:
    d: int
    r: int
    e: int

    def starts(self):
        """Start times that finish by the deadline; empty when e - r < d."""
        return range(self.r, self.e - self.d + 1)


@dataclass
class SchedulingInstance:
    machines: int
    horizon: int
    tasks: list = field(default_factory=list)

    def __post_init__(self):
        if self.machines < 1:
            raise ParameterError(f"Need at least one machine, got {self.machines}")
        if self.horizon < 1:
            raise ParameterError(f"Horizon must be >= 1, got {self.horizon}")
        self.tasks = [task if isinstance(task, Task) else Task(**task) for task in self.tasks]
        for i, task in enumerate(self.tasks, start=1):
            if task.d < 1:
                raise ParameterError(f"Task {i}: duration must be >= 1, got {task.d}")
            if not 1 <= task.r <= task.e <= self.horizon:
                raise ParameterError(f"Task {i}: need 1 <= r <= e <= T, got r={task.r} e={task.e} T={self.horizon}")

    @property
    def n_tasks(self):
        return len(self.tasks)

    def to_dict(self):
        return {"N": self.n_tasks, "M": self.machines, "T": self.horizon,
                "tasks": [asdict(task) for task in self.tasks]}

    @classmethod
    def from_dict(cls, data):
        try:
            instance = cls(int(data["M"]), int(data["T"]), [Task(int(t["d"]), int(t["r"]), int(t["e"]))
                                                           for t in data["tasks"]])
            declared = int(data["N"])
        except ParameterError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"Malformed scheduling instance: {e}")
        if declared != instance.n_tasks:
            raise FormatError(f"Instance declares N={declared} but lists {instance.n_tasks} tasks")
        return instance


def load_instance(instance_file_path):
    """
    Load a scheduling instance from a JSON file.

    Args:
        instance_file_path (str): Path to the JSON file.

    Returns:
        SchedulingInstance
    """
    with open(instance_file_path, 'r') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError(f"Invalid JSON in {instance_file_path}: {e}")
    return SchedulingInstance.from_dict(data)


def dump_instance(instance, instance_file_path):
    with open(instance_file_path, 'w') as f:
        json.dump(instance.to_dict(), f, indent=4)


def start_variable(pool, i, t, m):
    return pool.intern(start_name(i, t, m))


def start_name(i, t, m):
    return VarName(START_KIND, (i, t, m))


def encode_scheduling(instance, pool=None, sink=None, per_time_amo=False):
    """
    Encode a scheduling instance.

    Clauses:
        (-sched-x(i,t,m) | y(m,t,t+d))     occupancy of the chosen start
        AMO over sched-x(i,t,m), d_i = d   per start t, duration d and machine m (product encoding)
        OR of all sched-x(i,t,m)           every task is scheduled; empty when it has no start
        disjointness of the y(m,.,.)       recursive interval encoder, variant I0, per machine

    The per-machine encoder follows ``scheduling.block_rule``. With ``log-count`` blocks the size is
    O(NMT + M T^2 lg T); the default ``log-size`` blocks of about lg T positions are smaller on
    horizons of a few hundred steps, where the constant of the other rule is still growing.

    With ``per_time_amo`` the baseline formulation is produced instead: the at-least-one clauses
    plus, for every time unit u and machine m, a pairwise at-most-one over the starts occupying u.

    Args:
        instance (SchedulingInstance): The instance.
        pool (VarMap): Variable pool.
        sink (Formula or ClauseCounter): Clause sink.
        per_time_amo (bool): Emit the baseline formulation.

    Returns:
        The sink.
    """
    pool = VarMap() if pool is None else pool
    sink = Formula() if sink is None else sink
    M, T = instance.machines, instance.horizon

    starts = {}
    for i, task in enumerate(instance.tasks, start=1):
        starts[i] = [(t, m, start_variable(pool, i, t, m)) for t in task.starts() for m in range(1, M + 1)]
        sink.add_clause([x for _, _, x in starts[i]])

    if per_time_amo:
        for m in range(1, M + 1):
            for u in range(1, T):
                running = [x for i, task in enumerate(instance.tasks, start=1) for t, machine, x in starts[i]
                           if machine == m and t <= u < t + task.d]
                amo_pairwise(running, sink)
        logger.info(f"Per-time scheduling encoding: {len(sink)} clauses")
        return sink

    y = {(m, t1, t2): pool.intern(VarName("y", (m, t1, t2)))
         for m in range(1, M + 1) for t1 in range(1, T + 1) for t2 in range(t1 + 1, T + 1)}
    classes = defaultdict(list)
    for i, task in enumerate(instance.tasks, start=1):
        for t, m, x in starts[i]:
            sink.add_clause((-x, y[(m, t, t + task.d)]))
            classes[(t, task.d, m)].append(x)
    for (t, d, m), literals in sorted(classes.items()):
        if len(literals) > 1:
            amo_product(literals, pool, sink, path=f"amo{t}-{d}-{m}")

    if T >= 2:
        for m in range(1, M + 1):
            occupancy = {(t1, t2): y[(m, t1, t2)] for (machine, t1, t2) in y if machine == m}
            params = BlockEncoderParams(T, Variant.I0, recursion_base=RECURSION_BASE, rule=BLOCK_RULE)
            encode_interval_isp_recursive(params, occupancy, pool, sink, path=f"m{m}")
    logger.info(f"Scheduling encoding of {instance.n_tasks} tasks on {M} machines, T={T}: {len(sink)} clauses")
    return sink


def decode_schedule(instance, model, pool):
    """
    Read a schedule off a model of ``encode_scheduling``.

    Returns:
        dict: Task index -> (start, machine), the first true start of every task.
    """
    schedule = {}
    for i, task in enumerate(instance.tasks, start=1):
        for t in task.starts():
            for m in range(1, instance.machines + 1):
                name = start_name(i, t, m)
                if i not in schedule and name in pool and model.get(pool.get(name)):
                    schedule[i] = (t, m)
    return schedule


def is_valid_schedule(instance, schedule):
    """Every task starts in its window and tasks sharing a machine occupy disjoint [t, t + d)."""
    if set(schedule) != set(range(1, instance.n_tasks + 1)):
        return False
    busy = defaultdict(set)
    for i, (t, m) in schedule.items():
        task = instance.tasks[i - 1]
        if t not in task.starts() or not 1 <= m <= instance.machines:
            return False
        units = set(range(t, t + task.d))
        if busy[m] & units:
            return False
        busy[m] |= units
    return True


def brute_force_schedule(instance, max_space=MAX_SCHEDULE_SPACE):
    """
    Exhaustive search for a schedule.

    Args:
        instance (SchedulingInstance): The instance.
        max_space (int): Largest product of per-task choice counts searched.

    Returns:
        dict or None: Task index -> (start, machine), or None when no schedule exists.
    """
    choices = [[(t, m) for t in task.starts() for m in range(1, instance.machines + 1)]
               for task in instance.tasks]
    space = math.prod(len(options) for options in choices)
    if space > max_space:
        raise SizeGuardError(f"Schedule search space {space} exceeds {max_space}")
    if any(not options for options in choices):
        return None

    busy = defaultdict(set)
    chosen = {}

    def place(i):
        if i > instance.n_tasks:
            return True
        d = instance.tasks[i - 1].d
        for t, m in choices[i - 1]:
            units = set(range(t, t + d))
            if busy[m] & units:
                continue
            busy[m] |= units
            chosen[i] = (t, m)
            if place(i + 1):
                return True
            busy[m] -= units
            del chosen[i]
        return False

    return dict(chosen) if place(1) else None
