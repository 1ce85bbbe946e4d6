"""Tokenizing and reading the s-expressions of workbench documents.

Comments run from ``;`` to the end of the line. Every token remembers
where it was found, so that errors can point at the offending form.
"""

import re
from typing import Iterable, List, Tuple, Union

from . import debug_helper
from .errors import WorkbenchError
from .lab_gettext import current_lang

_ = current_lang.translate

OPEN = "open"
CLOSE = "close"
NUMBER = "number"
SYMBOL = "symbol"

_token_re = re.compile(
    r"(?P<space>[ \t\r\f\v]+)|(?P<newline>\n)|(?P<comment>;[^\n]*)"
    r"|(?P<open>\()|(?P<close>\))|(?P<atom>[^\s();]+)"
)
_number_re = re.compile(r"[0-9]+\Z")

_token_format = "kind={kind}  string={string}  start={start}"


class Token:
    """A parenthesis, a natural number or a symbol.

    ``start`` is ``(row, col)``, both counted from 1.
    """

    def __init__(self, kind: str, string: str, row: int, col: int) -> None:
        self.kind = kind
        self.string = string
        self.start = self.start_row, self.start_col = row, col
        self.end = self.end_row, self.end_col = row, col + len(string)

    def __eq__(self, other: object) -> bool:
        """A token equals another token, or a string, with the same text."""
        return self.string == str(other)

    def __hash__(self) -> int:
        return hash(self.string)

    def __repr__(self) -> str:  # pragma: no cover
        return _token_format.format(
            kind=self.kind, string=repr(self.string), start=self.start
        )

    def __str__(self) -> str:
        return self.string

    def __len__(self) -> int:
        return len(self.string)

    def is_number(self) -> bool:
        return self.kind == NUMBER

    def is_symbol(self) -> bool:
        return self.kind == SYMBOL

    def value(self) -> int:
        return int(self.string)


class SList(list):  # type: ignore
    """A parenthesised form: a list of s-expressions plus the position
    of its opening parenthesis."""

    def __init__(self, start: Tuple[int, int], items: Iterable["SExpr"] = ()) -> None:
        super().__init__(items)
        self.start = start


SExpr = Union[Token, SList]


def tokenize(source: str) -> List[Token]:
    tokens = []
    row, line_start = 1, 0
    for match in _token_re.finditer(source):
        kind = match.lastgroup
        if kind == "newline":
            row += 1
            line_start = match.end()
            continue
        if kind in ("space", "comment"):
            continue
        text = match.group()
        col = match.start() - line_start + 1
        if kind == "atom":
            kind = NUMBER if _number_re.match(text) else SYMBOL
        tokens.append(Token(kind, text, row, col))  # type: ignore
    return tokens


def read_sexprs(source: str) -> List[SExpr]:
    """All the top-level s-expressions of ``source``."""
    top: List[SExpr] = []
    stack: List[SList] = []
    for token in tokenize(source):
        if token.kind == OPEN:
            stack.append(SList(token.start))
        elif token.kind == CLOSE:
            if not stack:
                raise WorkbenchError(
                    _("unexpected closing parenthesis"), *token.start
                )
            finished = stack.pop()
            (stack[-1] if stack else top).append(finished)
        else:
            (stack[-1] if stack else top).append(token)
    if stack:
        raise WorkbenchError(_("unclosed parenthesis"), *stack[-1].start)
    debug_helper.log(f"read {len(top)} top-level forms")
    return top


def position(expr: SExpr) -> Tuple[int, int]:
    return expr.start  # type: ignore


def show_sexpr(expr: SExpr) -> str:
    if isinstance(expr, Token):
        return expr.string
    return "(" + " ".join(show_sexpr(item) for item in expr) + ")"
