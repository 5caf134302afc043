"""Error types shared across the package."""


class ChipfireError(Exception):
    """Base class for errors raised by this package."""


class GraphConstructionError(ChipfireError, ValueError):
    """Raised when a multigraph violates a structural constraint (loop,
    disconnected, unknown vertex, malformed input)."""


class ResourceGuardError(ChipfireError, RuntimeError):
    """Raised when an exact computation would exceed its configured budget.

    The guard name identifies which enumeration tripped; callers (notably the
    CLI) surface it instead of silently grinding.
    """

    def __init__(self, guard: str, message: str | None = None):
        self.guard = guard
        super().__init__(message or f"resource guard tripped: {guard}")


class PreconditionError(ChipfireError, ValueError):
    """Raised when an operation's mathematical precondition fails.

    Distinct from a mere invalid argument: the input is well formed but does
    not satisfy the hypothesis the result would be meaningless without.
    """
