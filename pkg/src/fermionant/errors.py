"""Exception types shared across the package.

Exit-code mapping used by the CLI: input/format problems exit 2, capacity
limits exit 3, identity violations found by ``verify`` exit 4.
"""

from __future__ import annotations


class CapacityError(Exception):
    """An input exceeds a configured size bound for an exact algorithm."""


class FormatError(ValueError):
    """A document (graph or matrix file) is malformed.

    The message carries positional context: line/field for syntax problems,
    the offending vertex or edge for semantic ones.
    """


class ConsistencyError(Exception):
    """An internal cross-check failed; indicates a bug, not bad input."""
