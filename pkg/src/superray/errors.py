"""Exception types raised by superray."""


class SuperrayError(Exception):
    """Base class for all library errors."""


class DomainError(SuperrayError, ValueError):
    """An input lies outside the domain where a formula is defined."""


class EvanescentBandError(DomainError):
    """A permittivity is negative, so the wave does not propagate."""


class ConvergenceError(SuperrayError, RuntimeError):
    """An iteration failed to reach its tolerance within its budget."""
