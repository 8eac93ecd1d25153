"""Errors raised by coverenc. Every error is also a builtin ValueError or KeyError."""


class CoverencError(Exception):
    """Base class of all coverenc errors."""


class TautologyError(CoverencError, ValueError):
    """A clause would contain a literal and its complement."""


class ClauseError(CoverencError, ValueError):
    """A clause contains an invalid literal."""


class DuplicateVariableError(CoverencError, ValueError):
    """A variable name was interned twice."""


class MissingVariableError(CoverencError, KeyError):
    """A variable name is not present in the VarMap."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class SizeGuardError(CoverencError, ValueError):
    """An oracle input exceeds its desk-scale limit."""


class InvalidCoverError(CoverencError, ValueError):
    """A clique or biclique cover does not cover the graph."""


class GridProductError(CoverencError, ValueError):
    """A grid product expands to tautologies, collisions or clauses missing from the formula."""


class ParameterError(CoverencError, ValueError):
    """Inconsistent parameters, or a strategy not applicable to the input."""


class FormatError(CoverencError, ValueError):
    """A file does not follow its text format."""
