"""Reading workbench documents.

A document is a sequence of s-expressions, one form each::

    (universe (terms 2))
    (fuel 10000)
    (per A (carrier 0 1) (classes (0) (1)))
    (family small A B)
    (functor F (prod id (const A)))
    (algebra alg (functor F) (carrier A) (structure 2))
    (assert (subper A B))
    (run fixpoint F)

Declarations are resolved while reading, so that a document which parses
only refers to names it declares; every error carries the position of
the form it comes from.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import PerError, WorkbenchError
from ..functors import Const, ExpFrom, FunctorExpr, Id, Prod
from ..kernel.combinators import stdlib
from ..kernel.terms import ATOM_NAMES, Term, decode, encode
from ..kernel.universe import UniverseSpec
from ..lab_gettext import current_lang
from ..pers import DeclaredPer, Per
from ..token_utils import SExpr, SList, Token, position, read_sexprs, show_sexpr
from ..typing_info import Code
from ..utils import get_similar_words

_ = current_lang.translate

DECLARATION_KINDS = ("per", "family", "universe", "fuel", "functor", "algebra", "assert", "run")


@dataclass(frozen=True)
class AlgebraDecl:
    name: str
    functor: str
    carrier: str
    structure: Code


@dataclass(frozen=True)
class CheckForm:
    """An ``assert`` or ``run`` form, to be executed by ``run_checks``."""

    kind: str
    args: Tuple[SExpr, ...]
    label: str
    row: int
    col: int
    negated: bool = False
    is_run: bool = False


@dataclass
class WorkbenchDoc:
    pers: Dict[str, Per] = field(default_factory=dict)
    families: Dict[str, List[str]] = field(default_factory=dict)
    functors: Dict[str, FunctorExpr] = field(default_factory=dict)
    algebras: Dict[str, AlgebraDecl] = field(default_factory=dict)
    checks: List[CheckForm] = field(default_factory=list)
    universe: Optional[str] = None
    fuel: Optional[int] = None

    def names(self) -> List[str]:
        return [*self.pers, *self.families, *self.functors, *self.algebras]


def _error(message: str, expr: SExpr, choices: Optional[List[str]] = None, name: str = "") -> WorkbenchError:
    row, col = position(expr)
    suggestions = get_similar_words(name, choices) if choices and name else []
    return WorkbenchError(message, row, col, suggestions)


def _symbol(expr: SExpr, what: str) -> str:
    if not isinstance(expr, Token) or not expr.is_symbol():
        raise _error(_("expected {what}, found {found}").format(what=what, found=show_sexpr(expr)), expr)
    return expr.string


def _number(expr: SExpr, what: str) -> int:
    if not isinstance(expr, Token) or not expr.is_number():
        raise _error(_("expected {what}, found {found}").format(what=what, found=show_sexpr(expr)), expr)
    return expr.value()


def _clause(expr: SExpr, keyword: str) -> SList:
    """``(keyword ...)``, as found in per and algebra declarations."""
    if not isinstance(expr, SList) or not expr or expr[0] != keyword:
        raise _error(
            _("expected ({keyword} ...), found {found}").format(keyword=keyword, found=show_sexpr(expr)),
            expr,
        )
    return expr


def term_from_sexpr(expr: SExpr) -> Term:
    """Term literal: ``K``, ``S``, ``I``, a library name such as ``B`` or
    ``PAIR``, a code, or a parenthesised left-associated application."""
    library = stdlib().as_dict()
    if isinstance(expr, Token):
        if expr.is_number():
            return decode(expr.value())
        if expr.string in ATOM_NAMES:
            return ATOM_NAMES[expr.string]
        if expr.string in library:
            return decode(library[expr.string])
        raise _error(
            _("unknown combinator {name}").format(name=expr.string),
            expr,
            list(library),
            expr.string,
        )
    if not expr:
        raise _error(_("empty application"), expr)
    terms = [term_from_sexpr(item) for item in expr]
    return terms[0](*terms[1:])


def code_from_sexpr(expr: SExpr) -> Code:
    if isinstance(expr, Token) and expr.is_number():
        return expr.value()
    return encode(term_from_sexpr(expr))


class _Reader:
    def __init__(self) -> None:
        self.doc = WorkbenchDoc()

    def resolve(self, expr: SExpr, table: Dict[str, object], what: str) -> str:
        name = _symbol(expr, what)
        if name not in table:
            raise _error(
                _("unknown {what} {name}").format(what=what, name=name),
                expr,
                list(table),
                name,
            )
        return name

    def declare(self, expr: SExpr) -> str:
        name = _symbol(expr, _("a name"))
        if name in self.doc.names():
            raise _error(_("{name} is already declared").format(name=name), expr)
        return name

    def read(self, form: SExpr) -> None:
        if not isinstance(form, SList) or not form:
            raise _error(_("expected a form such as (per ...), found {found}").format(found=show_sexpr(form)), form)
        head = form[0]
        kind = _symbol(head, _("a form name"))
        method = getattr(self, "read_" + kind.replace("-", "_"), None)
        if kind not in DECLARATION_KINDS or method is None:
            raise _error(
                _("unknown form {kind}").format(kind=kind), head, list(DECLARATION_KINDS), kind
            )
        method(form)

    def read_per(self, form: SList) -> None:
        if len(form) not in (3, 4):
            raise _error(_("expected (per NAME (carrier ...) (classes ...))"), form)
        name = self.declare(form[1])
        carrier = None
        if len(form) == 4:
            carrier = [_number(item, _("a code")) for item in _clause(form[2], "carrier")[1:]]
        classes = []
        for block in _clause(form[-1], "classes")[1:]:
            if not isinstance(block, SList):
                raise _error(_("a class is a parenthesised list of codes"), block)
            classes.append([_number(item, _("a code")) for item in block])
        try:
            self.doc.pers[name] = DeclaredPer(classes, name=name, carrier=carrier)
        except PerError as error:
            raise _error(str(error), form) from error

    def read_family(self, form: SList) -> None:
        if len(form) < 3:
            raise _error(_("a family needs a name and at least one member"), form)
        name = self.declare(form[1])
        table = {**self.doc.pers, **self.doc.algebras}
        members = [self.resolve(item, table, _("per or algebra")) for item in form[2:]]
        kinds = {member in self.doc.pers for member in members}
        if len(kinds) > 1:
            raise _error(_("a family holds either pers or algebras, not both"), form)
        self.doc.families[name] = members

    def read_universe(self, form: SList) -> None:
        if self.doc.universe is not None:
            raise _error(_("the universe is already declared"), form)
        if len(form) != 2 or not isinstance(form[1], SList) or len(form[1]) != 2:
            raise _error(_("expected (universe (codes N)) or (universe (terms K))"), form)
        kind = _symbol(form[1][0], "codes or terms")
        bound = _number(form[1][1], _("a bound"))
        try:
            self.doc.universe = str(UniverseSpec.parse(f"{kind}:{bound}"))
        except ValueError as error:
            raise _error(str(error), form) from error

    def read_fuel(self, form: SList) -> None:
        if self.doc.fuel is not None:
            raise _error(_("the fuel is already declared"), form)
        if len(form) != 2:
            raise _error(_("expected (fuel N)"), form)
        fuel = _number(form[1], _("a number of steps"))
        if fuel < 1:
            raise _error(_("Fuel must be a positive number of steps."), form)
        self.doc.fuel = fuel

    def functor_expr(self, expr: SExpr) -> FunctorExpr:
        if isinstance(expr, Token):
            if expr == "id":
                return Id()
            name = self.resolve(expr, self.doc.functors, _("functor"))  # type: ignore
            return self.doc.functors[name]
        if not expr:
            raise _error(_("empty functor expression"), expr)
        head = _symbol(expr[0], "const, prod or exp")
        if head == "const" and len(expr) == 2:
            return Const(self.doc.pers[self.resolve(expr[1], self.doc.pers, "per")])  # type: ignore
        if head == "prod" and len(expr) == 3:
            return Prod(self.functor_expr(expr[1]), self.functor_expr(expr[2]))
        if head == "exp" and len(expr) == 3:
            domain = self.doc.pers[self.resolve(expr[1], self.doc.pers, "per")]  # type: ignore
            return ExpFrom(domain, self.functor_expr(expr[2]))
        raise _error(
            _("expected id, (const P), (prod E E) or (exp P E), found {found}").format(found=show_sexpr(expr)),
            expr,
        )

    def read_functor(self, form: SList) -> None:
        if len(form) != 3:
            raise _error(_("expected (functor NAME EXPRESSION)"), form)
        name = self.declare(form[1])
        self.doc.functors[name] = self.functor_expr(form[2])

    def read_algebra(self, form: SList) -> None:
        if len(form) != 5:
            raise _error(_("expected (algebra NAME (functor F) (carrier P) (structure CODE))"), form)
        name = self.declare(form[1])
        functor_clause = _clause(form[2], "functor")
        carrier_clause = _clause(form[3], "carrier")
        structure_clause = _clause(form[4], "structure")
        for clause in (functor_clause, carrier_clause, structure_clause):
            if len(clause) != 2:
                raise _error(_("expected a single value in {clause}").format(clause=show_sexpr(clause)), clause)
        functor = self.resolve(functor_clause[1], self.doc.functors, _("functor"))  # type: ignore
        carrier = self.resolve(carrier_clause[1], self.doc.pers, "per")  # type: ignore
        structure = code_from_sexpr(structure_clause[1])
        self.doc.algebras[name] = AlgebraDecl(name, functor, carrier, structure)

    def check_form(self, expr: SExpr, is_run: bool, negated: bool = False) -> CheckForm:
        from .checks import registry

        if is_run:
            items = list(expr)  # type: ignore
        else:
            if not isinstance(expr, SList) or not expr:
                raise _error(_("expected an assertion such as (subper A B)"), expr)
            items = list(expr)
        kind = _symbol(items[0], _("a check name"))
        if not is_run and kind == "not":
            if len(items) != 2:
                raise _error(_("expected (not ASSERTION)"), expr)
            inner = self.check_form(items[1], False, not negated)
            return CheckForm(inner.kind, inner.args, f"(not {inner.label})", *position(expr), inner.negated, False)
        kinds = registry.runs if is_run else registry.asserts
        if kind not in kinds:
            raise _error(_("unknown check {kind}").format(kind=kind), items[0], list(kinds), kind)
        args = tuple(items[1:])
        kinds[kind].validate(self, args, expr)
        label = " ".join(show_sexpr(item) for item in items)
        label = f"run {label}" if is_run else f"({label})"
        return CheckForm(kind, args, label, *position(expr), negated, is_run)

    def read_assert(self, form: SList) -> None:
        if len(form) != 2:
            raise _error(_("expected (assert ASSERTION)"), form)
        self.doc.checks.append(self.check_form(form[1], False))

    def read_run(self, form: SList) -> None:
        if len(form) < 2:
            raise _error(_("expected (run KIND ...)"), form)
        self.doc.checks.append(self.check_form(SList(form.start, form[1:]), True))


def parse_workbench(text: str) -> WorkbenchDoc:
    reader = _Reader()
    for form in read_sexprs(text):
        reader.read(form)
    return reader.doc


def parse_run(doc: WorkbenchDoc, text: str) -> CheckForm:
    """A run form given outside the document, as in ``fixpoint F``;
    names resolve against ``doc``."""
    reader = _Reader()
    reader.doc = doc
    items = read_sexprs(text)
    if not items:
        raise WorkbenchError(_("nothing to run"))
    return reader.check_form(SList((1, 1), items), True)
