"""Bracket abstraction: compiles ``λx. M`` into K, S and I.

The rules are applied in this order, with no eta shortcut::

    [x] x     = I
    [x] M     = K M                when x does not occur in M
    [x] (M N) = S ([x] M) ([x] N)
"""

from typing import Iterable, List, Union

from ..errors import UnboundVariableError
from .terms import App, I, K, OpenTerm, S, Term, Var, as_term

Name = Union[str, Var]


def _var(name: Name) -> Var:
    return name if isinstance(name, Var) else Var(name)


def free_variables(term: Term) -> List[str]:
    """Names of the variables occurring in ``term``, in order of first occurrence."""
    found: List[str] = []
    pending = [term]
    while pending:
        node = pending.pop()
        if isinstance(node, Var):
            if node.name not in found:
                found.append(node.name)
        elif isinstance(node, App):
            pending.append(node.right)
            pending.append(node.left)
    return found


def occurs(var: Var, term: Term) -> bool:
    pending = [term]
    while pending:
        node = pending.pop()
        if isinstance(node, Var):
            if node.name == var.name:
                return True
        elif isinstance(node, App):
            pending.append(node.right)
            pending.append(node.left)
    return False


def abstract(var: Name, body: OpenTerm) -> Term:
    """``[var] body``. Other variables may remain free in the result."""
    x = _var(var)
    term = as_term(body)
    if term == x:
        return I
    if not occurs(x, term):
        return App(K, term)
    assert isinstance(term, App)
    return App(App(S, abstract(x, term.left)), abstract(x, term.right))


def lam(names: Iterable[Name], body: OpenTerm) -> Term:
    """``λx1 ... xn. body`` as a closed term.

    ``names`` may be a string such as ``"xyz"``, read one letter per
    variable. Raises ``UnboundVariableError`` if a variable of ``body``
    is not among ``names``.
    """
    variables = [_var(name) for name in names]
    term = as_term(body)
    for x in reversed(variables):
        term = abstract(x, term)
    remaining = free_variables(term)
    if remaining:
        raise UnboundVariableError(remaining[0])
    return term
