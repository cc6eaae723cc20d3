"""Exception hierarchy shared by every module."""


class MultiOpError(ValueError):
    """Base class for all errors raised by this package."""


class InputError(MultiOpError):
    """Malformed arguments: bad labels, non-permutations, wrong sizes."""


class DimensionError(InputError):
    """A subset bit vector does not fit the carrier it is used with."""


class AxiomError(MultiOpError):
    """An operation that needs an associative table was given a non-associative one."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(MultiOpError):
    """A documented precondition (congruence, strong simplicity, ...) fails."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ModeError(InputError):
    """A construction mode is not legal for the given input."""


class CompatibilityError(PreconditionError):
    """Two operations do not satisfy the mixed associativity law needed to merge them."""


class NotFoundError(MultiOpError):
    """A required distinguished element (zero, identity) does not exist."""


class ResourceError(MultiOpError):
    """A computation would exceed its configured size or work budget."""


class InternalError(AssertionError):
    """A computed object violates a property that is guaranteed by theory."""
