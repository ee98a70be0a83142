"""Exceptions shared across the package."""


class NonzeroRemainder(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class NotSeparable(ValueError):
    """Operation requires a separable permutation."""


class Not231Avoiding(ValueError):
    """Operation requires a 231-avoiding permutation."""


class IncomparableEndpoints(ValueError):
    """Interval endpoints are not comparable in the weak order."""


class InternalInversionFailure(RuntimeError):
    """The pair reconstruction produced a pair that fails verification."""


class GuardExceeded(ValueError):
    """A resource guard refused the requested problem size.

    Every guarded entry point accepts force=True (--force on the command
    line) to override the guard.
    """


class CheckpointError(ValueError):
    """A survey checkpoint does not match the data on disk."""
