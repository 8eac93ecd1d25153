import logging
import re
from typing import NamedTuple

from pysat.formula import IDPool

from coverenc.exceptions import DuplicateVariableError, FormatError, MissingVariableError

logger = logging.getLogger(__name__)

_NAME_RE = re.compile(r"^([A-Za-z][\w\-]*)\(([^()@]*)\)(?:@(\S+))?$")


class VarName(NamedTuple):
    """
    Structured name of a variable, e.g. ``x(1,3)`` or ``y(2,4)@/x1-2``.

    The path records where in a recursive encoding the variable was created.
    """
    kind: str
    args: tuple = ()
    path: str = ""

    def __str__(self):
        text = f"{self.kind}({','.join(str(a) for a in self.args)})"
        return f"{text}@{self.path}" if self.path else text


def parse_name(text):
    """
    Parse the sidecar grammar ``kind(a1,a2,...)[@path]``.

    Args:
        text (str): Name as written by ``str(VarName)``.

    Returns:
        VarName: The parsed name. Integer arguments are converted back to int.
    """
    match = _NAME_RE.match(text.strip())
    if not match:
        raise FormatError(f"Malformed variable name: {text!r}")
    kind, raw_args, path = match.groups()
    args = []
    if raw_args:
        for arg in raw_args.split(","):
            arg = arg.strip()
            try:
                args.append(int(arg))
            except ValueError:
                args.append(arg)
    return VarName(kind, tuple(args), path or "")


class VarMap:
    """
    Bijection between structured variable names and contiguous DIMACS indices starting at 1.
    """

    def __init__(self):
        self._pool = IDPool(start_from=1)
        self._aux_counter = 0

    def fresh(self, name):
        """
        Intern a new name.

        Args:
            name (VarName): Name not yet present.

        Returns:
            int: The newly allocated index (current top + 1).
        """
        if name in self._pool.obj2id:
            raise DuplicateVariableError(f"Variable {name} is already interned")
        return self._pool.id(name)

    def intern(self, name):
        """Return the index of ``name``, allocating it on first use."""
        return self._pool.id(name)

    def fresh_aux(self, kind="aux", path=""):
        """Allocate an anonymous auxiliary variable named by a running counter."""
        self._aux_counter += 1
        name = VarName(kind, (self._aux_counter,), path)
        while name in self._pool.obj2id:
            self._aux_counter += 1
            name = VarName(kind, (self._aux_counter,), path)
        return self._pool.id(name)

    def get(self, name):
        if name not in self._pool.obj2id:
            raise MissingVariableError(f"Variable {name} is not interned")
        return self._pool.obj2id[name]

    def name_of(self, index):
        name = self._pool.obj(index)
        if name is None:
            raise MissingVariableError(f"Index {index} is not allocated")
        return name

    def items(self):
        """Pairs (index, name) in index order."""
        return [(index, self._pool.obj(index)) for index in range(1, self.top + 1)]

    @property
    def top(self):
        return self._pool.top

    def __contains__(self, name):
        return name in self._pool.obj2id

    def __len__(self):
        return self._pool.top

    def __repr__(self):
        return f"VarMap(top={self.top})"


def write_varmap(varmap):
    """
    Serialise a VarMap as ``index<TAB>name`` lines.
    """
    return "".join(f"{index}\t{name}\n" for index, name in varmap.items())


def read_varmap(text):
    """
    Parse a sidecar written by ``write_varmap``.

    Args:
        text (str): Sidecar contents.

    Returns:
        VarMap: A map with the same indices.
    """
    entries = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise FormatError(f"Line {line_number}: expected 'index<TAB>name', got {line!r}")
        try:
            index = int(parts[0])
        except ValueError:
            raise FormatError(f"Line {line_number}: bad index {parts[0]!r}")
        entries.append((index, parse_name(parts[1])))

    entries.sort()
    varmap = VarMap()
    for expected, (index, name) in enumerate(entries, start=1):
        if index != expected:
            raise FormatError(f"Sidecar indices are not contiguous: expected {expected}, got {index}")
        varmap.fresh(name)
    return varmap
