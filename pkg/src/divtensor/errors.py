"""Exception hierarchy shared by every module."""


class DivTensorError(Exception):
    pass


class ShapeError(DivTensorError, ValueError):
    """Operands live in incompatible spaces, degrees or slot layouts."""


class BoundsError(ShapeError):
    """A variable index falls outside its space."""


class DomainError(DivTensorError, ValueError):
    """Input is well-formed but outside the operation's domain."""


class TruncationError(DomainError):
    """A graded class would be pushed above the ring's top weight."""


class ResourceError(DivTensorError):
    """An expansion would exceed the configured term cap."""


class InvariantViolation(DivTensorError, AssertionError):
    """An internal consistency check failed; always a bug."""
