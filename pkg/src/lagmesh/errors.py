"""Exception hierarchy.

Numerical failure modes are distinguished from plain argument errors so that
callers (and the CLI exit-code mapping) can tell a bad parameter from a
genuinely singular or degenerate computation.
"""


class LagmeshError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LagmeshError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ModelDomainError(LagmeshError):
    """A model function (kinetic or potential) returned a non-finite value
    at a point where the discretization needs it."""


class SingularityError(LagmeshError):
    """A computation hit a genuine singularity, e.g. the second-kind
    Legendre function at argument 1 (Coulomb diagonal matrix elements)."""


class DegeneracyError(LagmeshError):
    """The squared-radius matrix produced a non-positive eigenvalue,
    signalling a mesh or parameter pathology."""


class ConvergenceError(LagmeshError):
    """An iterative routine (Newton polish, eigensolver) failed to converge."""


class ConfigError(LagmeshError, ValueError):
    """A run configuration is malformed (unknown keys, bad types/values)."""
