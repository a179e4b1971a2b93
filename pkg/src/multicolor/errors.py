"""Exception types shared across the package.

The CLI maps these onto exit codes: infeasible answers exit 1, bad input
exits 2, blown resource guards exit 3.
"""


class InstanceFormatError(ValueError):
    """Raised when an instance document is malformed or inconsistent."""


class UnknownColorError(ValueError):
    """Raised when a color is not present in any vertex list."""


class NotPermissibleError(Exception):
    """Raised when a coloring is requested for a weight that admits none."""

    def __init__(self, weight):
        super().__init__(f"weight {tuple(weight)} is not permissible")
        self.weight = tuple(weight)


class ResourceLimitExceeded(Exception):
    """Raised when a computation would exceed a configured size guard."""
