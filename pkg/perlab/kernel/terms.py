"""Closed combinatory terms over K, S and I, and their bijective coding
into the natural numbers.

The coding scheme is fixed::

    encode(K) = 0, encode(S) = 1, encode(I) = 2
    encode(App(a, b)) = cantor(encode(a), encode(b)) + 3

with ``cantor(x, y) = (x + y)(x + y + 1)/2 + y``. Every natural number is
the code of exactly one term, so a code is at the same time a program
and a piece of data.

Terms are immutable and freely shared; equality is structural and
hashing is cached per node, so deep terms never need recursion.
"""

from math import isqrt
from typing import List, Optional, Tuple, Union

from ..errors import UnboundVariableError
from ..typing_info import Code

MAX_SHOWN_NODES = 200
# codes wider than this are shown by their size only; str() of a large
# int is quadratic and capped by the interpreter
MAX_SHOWN_BITS = 64


class Term:
    """Base class of combinatory terms."""

    __slots__ = ()

    @property
    def size(self) -> int:  # pragma: no cover
        raise NotImplementedError

    def __call__(self, *args: "Term") -> "Term":
        """``t(u, v)`` builds the left-associated application ``((t u) v)``."""
        term: Term = self
        for arg in args:
            term = App(term, arg)
        return term

    def __str__(self) -> str:
        return show_term(self)


class Atom(Term):
    """One of the three constants; there are exactly three instances."""

    __slots__ = ("name", "code")

    def __init__(self, name: str, code: Code) -> None:
        self.name = name
        self.code = code

    @property
    def size(self) -> int:
        return 1

    def __repr__(self) -> str:
        return self.name


class Var(Term):
    """A named hole, only allowed inside bodies given to ``abstract``."""

    __slots__ = ("name",)

    def __init__(self, name: str) -> None:
        self.name = name

    @property
    def size(self) -> int:
        return 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Var) and other.name == self.name

    def __hash__(self) -> int:
        return hash(("Var", self.name))

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


class App(Term):
    __slots__ = ("left", "right", "_size", "_hash", "_code")

    def __init__(self, left: Term, right: Term) -> None:
        self.left = left
        self.right = right
        self._size = left.size + right.size + 1
        self._hash = hash(("App", hash(left), hash(right)))
        self._code: Optional[Code] = None

    @property
    def size(self) -> int:
        return self._size

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, App):
            return False
        pending: List[Tuple[Term, Term]] = [(self, other)]
        while pending:
            a, b = pending.pop()
            if a is b:
                continue
            if isinstance(a, App) and isinstance(b, App):
                if a._hash != b._hash or a._size != b._size:
                    return False
                pending.append((a.right, b.right))
                pending.append((a.left, b.left))
            elif a != b:
                return False
        return True

    def __repr__(self) -> str:
        return f"App({self.left!r}, {self.right!r})"


K = Atom("K", 0)
S = Atom("S", 1)
I = Atom("I", 2)  # noqa: E741

ATOMS = (K, S, I)
ATOM_NAMES = {atom.name: atom for atom in ATOMS}

OpenTerm = Union[Term, Code]


def cantor(x: int, y: int) -> int:
    return (x + y) * (x + y + 1) // 2 + y


def uncantor(z: int) -> Tuple[int, int]:
    """Inverse of ``cantor``."""
    w = (isqrt(8 * z + 1) - 1) // 2
    y = z - w * (w + 1) // 2
    return w - y, y


def encode(term: Term) -> Code:
    """Gödel code of a closed term."""
    if isinstance(term, Atom):
        return term.code
    # post-order walk; codes are cached on the App nodes
    pending: List[Tuple[Term, bool]] = [(term, False)]
    codes: List[Code] = []
    while pending:
        node, expanded = pending.pop()
        if isinstance(node, Atom):
            codes.append(node.code)
        elif isinstance(node, Var):
            raise UnboundVariableError(node.name)
        elif isinstance(node, App):
            if node._code is not None:
                codes.append(node._code)
            elif expanded:
                right = codes.pop()
                left = codes.pop()
                node._code = cantor(left, right) + 3
                codes.append(node._code)
            else:
                pending.append((node, True))
                pending.append((node.right, False))
                pending.append((node.left, False))
        else:  # pragma: no cover
            raise TypeError(f"not a term: {node!r}")
    return codes[0]


def decode(code: Code) -> Term:
    """The unique term whose code is ``code``."""
    if code < 0:
        raise ValueError(f"codes are natural numbers, not {code}")
    if code < 3:
        return ATOMS[code]
    pending: List[Tuple[Code, bool]] = [(code, False)]
    built: List[Term] = []
    while pending:
        current, expanded = pending.pop()
        if current < 3:
            built.append(ATOMS[current])
        elif expanded:
            right = built.pop()
            left = built.pop()
            node = App(left, right)
            node._code = current
            built.append(node)
        else:
            x, y = uncantor(current - 3)
            pending.append((current, True))
            pending.append((y, False))
            pending.append((x, False))
    return built[0]


def as_term(value: OpenTerm) -> Term:
    """Codes embedded in a term are replaced by the terms they denote."""
    if isinstance(value, Term):
        return value
    return decode(value)


def spine(term: Term) -> Tuple[Term, List[Term]]:
    """Splits ``h a1 ... an`` into its head and its argument list."""
    args: List[Term] = []
    while isinstance(term, App):
        args.append(term.right)
        term = term.left
    args.reverse()
    return term, args


def show_code(code: Code) -> str:
    if code.bit_length() > MAX_SHOWN_BITS:
        return f"<code of {code.bit_length()} bits>"
    return str(code)


def show_term(term: Term) -> str:
    """Term literal syntax: ``K``, ``S``, ``I``, ``(t u ...)``."""
    if term.size > MAX_SHOWN_NODES:
        return f"<term with {term.size} nodes>"
    if isinstance(term, Atom):
        return term.name
    if isinstance(term, Var):
        return term.name
    head, args = spine(term)
    return "(" + " ".join(show_term(t) for t in [head, *args]) + ")"


def parse_term(text: str) -> Term:
    """Reads the term literal syntax; numbers stand for the terms they code.

    A top-level sequence such as ``S I (K K)`` is read as the
    left-associated application it spells.
    """
    from ..token_utils import read_sexprs
    from ..workbench.parser import term_from_sexpr

    items = read_sexprs(text)
    if not items:
        raise ValueError("empty term")
    terms = [term_from_sexpr(item) for item in items]
    return terms[0](*terms[1:])
