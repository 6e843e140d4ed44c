"""Exception types shared across the package.

The CLI maps these onto exit codes: ParseError -> 2, DomainError -> 3,
BudgetError -> 4.  ConventionError marks an internal consistency failure
and is never triggered by bad input.
"""


class BraidError(Exception):
    """Base class for all braidkit errors."""


class ParseError(BraidError):
    """Malformed input text, or a letter out of range for the stated strand count."""


class DomainError(BraidError):
    """Input outside an operation's domain (strand-count mismatch, non-pure braid, ...)."""


class BudgetError(BraidError):
    """A configured resource limit (rewrite steps, truncation degree) was exhausted."""


class ConventionError(BraidError):
    """An internal invariant broke; indicates a bug, not invalid input."""
