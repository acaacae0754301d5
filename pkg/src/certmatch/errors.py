"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: bad vertex ids, self-loops, unparseable files."""


class CapacityError(RuntimeError):
    """An exhaustive-search guard was exceeded."""


class ContractError(AssertionError):
    """A documented precondition of an operation was violated."""


class CertificationError(RuntimeError):
    """The solver produced a certificate its own checker rejects.

    This always indicates an implementation bug, never bad input.
    """
