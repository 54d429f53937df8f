"""Exceptions raised across the project.

Every error knows how to render itself as a single machine-parseable line, so the
command-line front end can print the reason together with the offending constraint.
"""

from __future__ import annotations


class SuzukiError(Exception):
    """Base class for every error raised by the library."""

    kind = "error"

    def __init__(self, reason: str, constraint: str = "") -> None:
        """Store the human-readable reason and the violated constraint."""
        super().__init__(reason)
        self.reason = reason
        self.constraint = constraint

    def one_line(self) -> str:
        """Render the error as a single `key=value` line."""
        constraint = self.constraint.replace('"', "'")
        reason = self.reason.replace('"', "'")
        return f'error kind={self.kind} constraint="{constraint}" reason="{reason}"'


class ValidationError(SuzukiError, ValueError):
    """Invalid parameters, ranges or preconditions."""

    kind = "validation"


class FieldError(ValidationError):
    """Invalid finite-field input: reducible modulus, mixed fields, zero inversion."""

    kind = "field"


class BudgetExceededError(SuzukiError):
    """A computation would exceed its configured budget and is refused."""

    kind = "budget"

    def __init__(
        self, reason: str, budget: int, required: int, hint: str = "",
    ) -> None:
        """Record the budget, the amount the computation needs, and a hint."""
        super().__init__(reason, constraint=f"required {required} <= budget {budget}")
        self.budget = budget
        self.required = required
        self.hint = hint

    def one_line(self) -> str:
        """Render the error line, appending the hint when there is one."""
        line = super().one_line()
        return f'{line} hint="{self.hint}"' if self.hint else line


class SingletonViolationError(SuzukiError):
    """Quantum parameters violate the quantum Singleton bound (an upstream bug)."""

    kind = "singleton"
