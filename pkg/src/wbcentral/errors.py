"""Exception types raised by the solver."""


class SolverError(Exception):
    """Base class for errors raised while advancing a simulation."""


class PositivityError(SolverError):
    """Density or pressure became non-positive.

    ``index`` is the offending position in the array that was checked (for
    grid arrays this includes ghost cells) and ``time`` the simulation time
    when known.
    """

    def __init__(self, message, index=None, time=None):
        super().__init__(message)
        self.index = index
        self.time = time


class NonFiniteError(SolverError):
    def __init__(self, message, index=None, time=None):
        super().__init__(message)
        self.index = index
        self.time = time


class DegenerateFanError(SolverError):
    """A sub-cell region has non-positive width (CFL violated)."""


class ZeroSpacingError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


class NonPositiveError(ValueError):
    pass


class IoError(OSError):
    """Writing an output file failed."""


class UsageError(ValueError):
    """Unknown or malformed command-line option."""


class ValidationError(ValueError):
    """Option value outside its allowed range."""
