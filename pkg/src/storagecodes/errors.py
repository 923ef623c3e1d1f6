"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ParameterError -> 2, BudgetError -> 3,
PropertyViolation -> 4.
"""


class ParameterError(ValueError):
    """An argument is outside the documented domain of an operation."""


class BudgetError(RuntimeError):
    """A computation would exceed its configured size or memory budget."""


class PropertyViolation(AssertionError):
    """An invariant that must hold by theorem failed; indicates a bug."""
