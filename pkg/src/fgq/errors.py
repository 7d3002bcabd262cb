"""Exception hierarchy shared by every fgq module."""


class FGQError(Exception):
    """Base class for all errors raised by fgq."""


class StructureError(FGQError, ValueError):
    """Malformed input: wrong dimensions, out-of-range entries, size mismatch."""


class DegenerateInputError(FGQError, ValueError):
    pass


class CongruenceError(FGQError, ValueError):
    """A partition is not compatible with the multiplication."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAGroupError(FGQError, ValueError):
    pass


class CapacityError(FGQError, ValueError):
    pass


class InvalidFormError(FGQError, ValueError):
    pass


class NotFGError(FGQError, ValueError):
    """The table is not an FG-quasigroup; ``witness`` names a failing tuple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(FGQError, ValueError):
    pass


class InconsistencyError(FGQError, RuntimeError):
    """An internal certificate failed; indicates a bug, not bad input."""


class InvalidModuleError(FGQError, ValueError):
    pass


class ConfigError(FGQError, ValueError):
    pass
