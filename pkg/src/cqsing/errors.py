"""Shared exception types.  The CLI maps them onto exit codes."""


class InputError(ValueError):
    """Invalid user input (CLI exit code 2)."""


class ConsistencyError(RuntimeError):
    """An internal identity failed; indicates a bug, not bad input (exit code 3)."""


class UnsupportedError(RuntimeError):
    """Requested data lies outside the verified pattern (exit code 4)."""
