"""Shared exception types.

Two families matter for the CLI exit protocol: ``InputError`` (malformed or
out-of-contract input, exit code 2) and ``BudgetError`` (a resource guard
tripped before an answer was reached, exit code 3).  A budget abort is never
a mathematical verdict.
"""

from __future__ import annotations


class InputError(ValueError):
    """Malformed input or a violated operation precondition."""


class NotHypersolvableError(InputError):
    """Raised by operations that require a hypersolvable arrangement.

    ``certificate`` holds dead-end index sets reached by the exhaustive
    composition-series search (the frontier of maximal chains).
    """

    def __init__(self, message: str, certificate: tuple = ()):
        super().__init__(message)
        self.certificate = certificate


class BudgetError(RuntimeError):
    """A configurable work guard was exceeded; the computation was aborted."""


class SearchBudgetExceeded(BudgetError):
    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class WorkBoundExceeded(BudgetError):
    """A dimension/size bound refused a computation before it started."""


class MinorCapExceeded(BudgetError):
    """Minor enumeration would exceed the configured cap."""
