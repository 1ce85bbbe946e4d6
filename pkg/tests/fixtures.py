"""Pers, budgets and functor expressions shared by the unit tests."""

from perlab.functors import Const, ExpFrom, Id, Prod
from perlab.pers import DeclaredPer, empty_per, make_budget

# every term with at most one application node: 12 codes
TINY = make_budget("terms:1", 2_000)
# every term with at most two application nodes: 66 codes
SMALL = make_budget("terms:2", 10_000)
# the codes 0, 1 and 2 only
CODES_2 = make_budget("codes:2", 2_000)

EMPTY = empty_per()
A = DeclaredPer([[0]], name="A")
B = DeclaredPer([[0], [1]], name="B")
C = DeclaredPer([[0], [2]], name="C")
D = DeclaredPer([[0], [1], [2]], name="D")
E = DeclaredPer([[0, 1], [2]], name="E")
TOP = DeclaredPer([[0, 1, 2, 3]], name="top")

CHAIN = [EMPTY, A, B]


def suite():
    """Functor expressions whose least fixpoint is reached over ``codes:2``."""
    return [
        Id(),
        Const(A),
        ExpFrom(EMPTY, Id()),
        ExpFrom(A, Id()),
        ExpFrom(A, Const(A)),
        Prod(Id(), Id()),
    ]
