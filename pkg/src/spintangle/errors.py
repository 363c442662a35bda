"""Exception types shared across the package."""


class SpintangleError(Exception):
    """Base class for all package errors."""


class ParameterError(SpintangleError, ValueError):
    """An argument is outside its documented domain."""


class StateError(SpintangleError, ValueError):
    """A quantum state or density matrix violates its invariants."""


class OrbitError(SpintangleError, ValueError):
    """A point sequence is not a closed orbit of the map."""


class CapacityError(SpintangleError, ValueError):
    """Requested size exceeds the brute-force reference limits."""


class ConfigError(SpintangleError, ValueError):
    """A scenario configuration is malformed or inconsistent."""


class InvariantViolation(SpintangleError, RuntimeError):
    """A numerical invariant failed at run time (theorem-level bug)."""
