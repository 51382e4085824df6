"""Exception hierarchy shared across the package."""


class EdvarError(Exception):
    """Base class for all package-specific errors."""


class RingMismatchError(EdvarError):
    """Operands built over different variable rings."""


class ValidationError(EdvarError):
    """Precondition violated by the caller's input."""


class DegenerateInputError(EdvarError):
    """Input is structurally degenerate (e.g. zero elimination ideal)."""


class ResourceBudgetError(EdvarError):
    """A computation exceeded its pair/step budget."""

    def __init__(self, message, pairs_done=None, basis_size=None):
        super().__init__(message)
        self.pairs_done = pairs_done
        self.basis_size = basis_size


class ParseError(EdvarError):
    """Malformed input text; carries 1-based line/column."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
