"""Shared exception types and the process exit-code taxonomy."""

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INVALID = 2
EXIT_HYPOTHESES = 3
EXIT_BUDGET = 4


class GradlabError(Exception):
    """Base class for all library errors."""


class ValidationError(GradlabError):
    """Input fails a structural check.

    ``witness`` carries the offending item when one exists, for example the
    triple where associativity breaks or the basis pair violating a grading.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class HypothesesUnmetError(GradlabError):
    """A decider's standing hypotheses do not hold for the given instance."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BudgetExceededError(GradlabError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class FalsificationError(GradlabError):
    """Two routes that must agree on conforming input disagreed."""
