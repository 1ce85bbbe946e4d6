"""Exceptions raised by perlab.

Running out of fuel is never an exception: it is an ``OutOfFuel``
outcome at the kernel level and an "undecided" verdict above it.
"""

from typing import List, Optional

from .utils import list_to_string


class PerlabError(Exception):
    """Base class for every error raised on purpose by perlab."""


class UnboundVariableError(PerlabError):
    def __init__(self, name: str) -> None:
        super().__init__(f"unbound variable `{name}`")
        self.name = name


class BudgetMismatchError(PerlabError):
    """Objects built under different budgets were combined."""


class PerError(PerlabError):
    """Malformed partition, or a construction on Pers that cannot be carried out."""


class CategoryError(PerlabError):
    """Mismatched endpoints, or a composite that does not track."""


class NotMonotoneError(PerlabError):
    def __init__(self, message: str, witness: Optional[str] = None) -> None:
        super().__init__(message)
        self.witness = witness


class NoFixpointError(PerlabError):
    def __init__(self, message: str, iterations: int) -> None:
        super().__init__(message)
        self.iterations = iterations


class WorkbenchError(PerlabError):
    """Parse or resolution error in a workbench document.

    ``row`` and ``col`` are 1-based; ``suggestions`` holds similar
    names when an unknown name was referenced.
    """

    def __init__(
        self,
        message: str,
        row: int = 0,
        col: int = 0,
        suggestions: Optional[List[str]] = None,
    ) -> None:
        self.message = message
        self.row = row
        self.col = col
        self.suggestions = suggestions or []
        super().__init__(self.__str__())

    def __str__(self) -> str:
        text = self.message
        if self.row:
            text = f"line {self.row}, column {self.col}: {text}"
        if self.suggestions:
            text += " (did you mean: " + list_to_string(self.suggestions) + "?)"
        return text
