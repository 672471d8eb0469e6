"""Error types shared across modules and mapped to CLI exit codes."""

from __future__ import annotations

__all__ = ["ValidationError", "NotConverged", "UnstableSimulation"]


class ValidationError(ValueError):
    """Bad user input; carries the offending field name for error reports.

    Rendered by the CLI as ``error: <field>: <reason>`` with exit code 2.
    """

    def __init__(self, field: str, reason: str):
        super().__init__(f"{field}: {reason}")
        self.field = field
        self.reason = reason


class NotConverged(RuntimeError):
    """A simulation failed to reach the required steady state."""


class UnstableSimulation(RuntimeError):
    """Field update produced NaN/Inf; the run was aborted."""
