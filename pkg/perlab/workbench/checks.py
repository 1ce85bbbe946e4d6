"""The assertions and runs a workbench document can ask for.

Each kind is a function registered with ``registry._add``, together
with the kinds of arguments it takes; the parser uses the signature to
resolve names while reading, ``run_checks`` to build the objects the
function receives.
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .. import config, debug_helper
from ..algebras import (
    Algebra,
    check_cone,
    check_initiality,
    check_structure_map,
    din_experiment,
    make_algebra,
    r0_approx,
)
from ..category import Morphism, check_tracker, is_iso
from ..errors import PerlabError
from ..fixpoint import kleene_lfp, verify_fixmap
from ..functors import (
    RealizableFunctor,
    check_identity_realizer,
    check_monotone,
    check_psi_repair,
    check_realizable,
    from_expr,
)
from ..kernel.laws import check_pca_laws
from ..kernel.reduction import show_tracker
from ..kernel.terms import show_code
from ..lab_gettext import current_lang, internal_error
from ..pers import (
    Budget,
    Per,
    check_includes,
    exponential,
    intersect,
    product,
    same_relation,
)
from ..token_utils import SExpr, SList, Token, show_sexpr
from ..verdicts import CheckReport, Stopwatch, Verdict
from ..yoneda import monotonize
from .parser import CheckForm, WorkbenchDoc, _error, _number, code_from_sexpr

_ = current_lang.translate

DEFAULT_LAW_LIMIT = 200

Results = List[Tuple[str, Verdict]]

# operand count of the per expressions usable in assertions; 0 for any
PER_OPERATORS = {"exp": 2, "prod": 2, "meet": 0}


@dataclass
class CheckKind:
    name: str
    signature: Tuple[str, ...]
    optional: Tuple[str, ...]
    function: Callable[..., Any]

    def validate(self, reader: Any, args: Sequence[SExpr], form: SExpr) -> None:
        kinds = self.signature + self.optional
        if not len(self.signature) <= len(args) <= len(kinds):
            raise _error(
                _("{name} takes the arguments: {kinds}").format(
                    name=self.name, kinds=" ".join(kinds) or "-"
                ),
                form,
            )
        for arg, kind in zip(args, kinds):
            _validate_arg(reader, kind, arg)


def _validate_arg(reader: Any, kind: str, arg: SExpr) -> None:
    doc: WorkbenchDoc = reader.doc
    if kind == "per":
        _validate_per(reader, arg)
    elif kind == "functor":
        reader.resolve(arg, doc.functors, _("functor"))
    elif kind in ("pers", "algebras"):
        name = reader.resolve(arg, doc.families, _("family"))
        holds_pers = doc.families[name][0] in doc.pers
        if holds_pers != (kind == "pers"):
            raise _error(
                _("{name} must be a family of {kind}").format(name=name, kind=kind), arg
            )
    elif kind == "code":
        code_from_sexpr(arg)
    elif kind == "number":
        _number(arg, _("a number"))
    elif kind.startswith("flag:"):
        flag = kind[len("flag:") :]
        if arg != flag:
            raise _error(_("expected {flag}").format(flag=flag), arg)
    else:  # pragma: no cover
        raise ValueError(kind)


def _validate_per(reader: Any, arg: SExpr) -> None:
    """A declared name, or ``(exp P Q)``, ``(prod P Q)`` or ``(meet P ...)``."""
    if isinstance(arg, Token):
        reader.resolve(arg, reader.doc.pers, "per")
        return
    head = str(arg[0]) if isinstance(arg, SList) and arg else ""
    arity = PER_OPERATORS.get(head)
    count = len(arg) - 1 if isinstance(arg, SList) else 0
    if arity is None or count < 1 or (arity and count != arity):
        raise _error(
            _("expected a per name, (exp P Q), (prod P Q) or (meet P ...), found {found}").format(
                found=show_sexpr(arg)
            ),
            arg,
        )
    for operand in arg[1:]:
        _validate_per(reader, operand)


class CheckRegistry:
    """Collects the check kinds, keyed by the name used in documents."""

    def __init__(self) -> None:
        self.asserts: Dict[str, CheckKind] = {}
        self.runs: Dict[str, CheckKind] = {}

    def _add(
        self, name: str, *signature: str, optional: Tuple[str, ...] = (), run: bool = False
    ) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
        def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
            table = self.runs if run else self.asserts
            table[name] = CheckKind(name, tuple(signature), optional, func)
            return func

        return decorator


registry = CheckRegistry()


class Context:
    """Objects of a document, built under one budget."""

    def __init__(self, doc: WorkbenchDoc, budget: Budget, trace: bool = False) -> None:
        self.doc = doc
        self.budget = budget
        self.trace = trace
        self._functors: Dict[str, RealizableFunctor] = {}
        self._algebras: Dict[str, Algebra] = {}
        self._derived: Dict[str, Per] = {}

    def per(self, name: str) -> Per:
        return self.doc.pers[name]

    def per_expr(self, arg: SExpr) -> Per:
        """The Per a per expression stands for, built once under the budget."""
        if isinstance(arg, Token):
            return self.per(arg.string)
        key = show_sexpr(arg)
        if key not in self._derived:
            head = str(arg[0])
            operands = [self.per_expr(operand) for operand in arg[1:]]
            if head == "exp":
                per = exponential(operands[0], operands[1], self.budget)
            elif head == "prod":
                per = product(operands[0], operands[1], self.budget)
            else:
                per = intersect(operands)
            self._derived[key] = per
        return self._derived[key]

    def functor(self, name: str) -> RealizableFunctor:
        if name not in self._functors:
            self._functors[name] = from_expr(self.doc.functors[name], self.budget, name)
        return self._functors[name]

    def algebra(self, name: str) -> Algebra:
        if name not in self._algebras:
            decl = self.doc.algebras[name]
            self._algebras[name] = make_algebra(
                self.functor(decl.functor),
                self.per(decl.carrier),
                decl.structure,
                self.budget,
                name,
            )
        return self._algebras[name]

    def lattice(self) -> List[Per]:
        """Every Per the document declares, in order."""
        return list(self.doc.pers.values())

    def convert(self, kind: str, arg: SExpr) -> Any:
        if kind == "per":
            return self.per_expr(arg)
        if kind == "functor":
            return self.functor(str(arg))
        if kind == "pers":
            return [self.per(name) for name in self.doc.families[str(arg)]]
        if kind == "algebras":
            return [self.algebra(name) for name in self.doc.families[str(arg)]]
        if kind == "code":
            return code_from_sexpr(arg)
        if kind == "number":
            assert isinstance(arg, Token)
            return arg.value()
        return True  # a flag that is present


def _lattice(ctx: Context, family: Optional[List[Per]]) -> List[Per]:
    return family if family is not None else ctx.lattice()


@registry._add("subper", "per", "per")
def subper(ctx: Context, smaller: Per, larger: Per) -> Verdict:
    return check_includes(smaller, larger)


@registry._add("related", "per", "code", "code")
def related(ctx: Context, per: Per, a: int, b: int) -> Verdict:
    if per.related(a, b):
        return Verdict.passed(1)
    return Verdict.failed(
        _("{a} and {b} are not related in {per}").format(
            a=show_code(a), b=show_code(b), per=per
        ),
        1,
    )


@registry._add("morphism", "code", "per", "per")
def morphism(ctx: Context, tracker: int, source: Per, target: Per) -> Verdict:
    return check_tracker(source, target, tracker, ctx.budget)


@registry._add("iso", "code", "per", "per")
def iso(ctx: Context, tracker: int, source: Per, target: Per) -> Verdict:
    tracking = check_tracker(source, target, tracker, ctx.budget)
    if not tracking.ok:
        return tracking
    inverse = is_iso(Morphism(source, target, tracker, ctx.budget), ctx.budget)
    if inverse is None:
        return Verdict.failed(
            _("no inverse of {n} at {budget}").format(n=show_tracker(tracker), budget=ctx.budget),
            tracking.checked,
        )
    return tracking.with_details(
        _("inverse tracked by {n}").format(n=show_tracker(inverse.tracker))
    )


@registry._add("monotone", "functor", optional=("pers",))
def monotone(ctx: Context, functor: RealizableFunctor, family: Optional[List[Per]] = None) -> Verdict:
    return check_monotone(functor.obj, _lattice(ctx, family))


@registry._add("realizable", "functor", optional=("pers",))
def realizable(
    ctx: Context, functor: RealizableFunctor, family: Optional[List[Per]] = None
) -> Verdict:
    return check_realizable(functor, _lattice(ctx, family), ctx.budget)


@registry._add("identity-realizer", "functor", optional=("pers",))
def identity_realizer(
    ctx: Context, functor: RealizableFunctor, family: Optional[List[Per]] = None
) -> Verdict:
    return check_identity_realizer(functor, _lattice(ctx, family), ctx.budget)


@registry._add("psi-repair", "functor", optional=("pers",))
def psi_repair(
    ctx: Context, functor: RealizableFunctor, family: Optional[List[Per]] = None
) -> Verdict:
    return check_psi_repair(functor, _lattice(ctx, family), ctx.budget)


@registry._add("fixpoint", "functor", "per")
def fixpoint(ctx: Context, functor: RealizableFunctor, expected: Per) -> Verdict:
    result = kleene_lfp(functor, ctx.budget, config.session.max_iter)
    if not same_relation(result.fixobject, expected):
        return Verdict.failed(
            _("the least fixpoint of {functor} is {found}, not {expected}").format(
                functor=functor, found=result.fixobject, expected=expected
            ),
            result.iterations,
        )
    if not result.fixmap_verified:
        return verify_fixmap(functor, result.fixobject, ctx.budget)
    return Verdict.passed(result.iterations)


@registry._add("initial", "functor", "algebras")
def initial(ctx: Context, functor: RealizableFunctor, family: List[Algebra]) -> Verdict:
    return check_initiality(functor, family, ctx.budget)


@registry._add("pca-laws", optional=("number",))
def pca_laws(ctx: Context, limit: int = DEFAULT_LAW_LIMIT) -> Verdict:
    return check_pca_laws(limit, ctx.budget.fuel, config.session.seed)


@registry._add("fixpoint", "functor", run=True)
def run_fixpoint(ctx: Context, functor: RealizableFunctor) -> Results:
    result = kleene_lfp(functor, ctx.budget, config.session.max_iter)
    verdict = verify_fixmap(functor, result.fixobject, ctx.budget)
    verdict = verdict.with_details(
        _("fixobject {per} after {n} iterations").format(per=result.fixobject, n=result.iterations)
    )
    if ctx.trace:
        verdict = verdict.with_details(*result.describe_trace())
    return [("", verdict)]


@registry._add(
    "initial-algebra", "functor", "algebras", optional=("flag:din-experiment",), run=True
)
def run_initial_algebra(
    ctx: Context, functor: RealizableFunctor, family: List[Algebra], din: bool = False
) -> Results:
    r0 = r0_approx(functor, family, ctx.budget)
    results = [
        (_("cone"), check_cone(functor, family, ctx.budget, r0)),
        (_("structure map"), check_structure_map(functor, family, ctx.budget, r0)),
        (_("initiality"), check_initiality(functor, family, ctx.budget)),
    ]
    if din:
        report = din_experiment(functor, family, ctx.budget)
        outcome = _("equal") if report.equal else _("differs at {w}").format(w=report.witness)
        # informational only: always reported as passing
        results.append((_("din-experiment: {outcome}").format(outcome=outcome), Verdict.passed()))
    return results


@registry._add("monotonize", "functor", "pers", run=True)
def run_monotonize(ctx: Context, functor: RealizableFunctor, family: List[Per]) -> Results:
    report = monotonize(functor, family, ctx.budget)
    return [
        (_("monotone {functor}").format(functor=functor), report.functor),
        (_("monotone {functor}*").format(functor=functor), report.star),
        (_("realizable {functor}*").format(functor=functor), report.star_realizable),
        (_("yoneda iso"), report.iso),
    ]


@registry._add("check-all", optional=("pers",), run=True)
def run_check_all(ctx: Context, family: Optional[List[Per]] = None) -> Results:
    """The kernel laws, then for every functor: monotonicity,
    realizability, the identity realizer, the repaired tracker and the
    least fixpoint over the declared Pers, then initiality for every
    family of algebras.

    Given a family of Pers, every functor is also monotonized over it.
    """
    results: Results = [("pca-laws", pca_laws(ctx))]
    lattice = ctx.lattice()
    for name in ctx.doc.functors:
        functor = ctx.functor(name)
        results.append((f"monotone {name}", check_monotone(functor.obj, lattice)))
        results.append((f"realizable {name}", check_realizable(functor, lattice, ctx.budget)))
        results.append(
            (f"identity-realizer {name}", check_identity_realizer(functor, lattice, ctx.budget))
        )
        results.append((f"psi-repair {name}", check_psi_repair(functor, lattice, ctx.budget)))
        results.append((f"fixpoint {name}", _guarded(lambda: run_fixpoint(ctx, functor)[0][1])))
        if family is not None:
            report = monotonize(functor, family, ctx.budget)
            results.append((f"monotone {name}*", report.star))
            results.append((f"realizable {name}*", report.star_realizable))
            results.append((f"yoneda iso {name}", report.iso))
    for name, members in ctx.doc.families.items():
        if members[0] in ctx.doc.algebras:
            algebras = [ctx.algebra(member) for member in members]
            functor = algebras[0].functor
            results.append(
                (f"initial {functor} {name}", check_initiality(functor, algebras, ctx.budget))
            )
    return results


def _guarded(check: Callable[[], Verdict]) -> Verdict:
    """Runs a check, turning errors into errored verdicts."""
    try:
        return check()
    except PerlabError as error:
        return Verdict.errored(str(error))
    except Exception as error:  # noqa
        debug_helper.log_exception(error)
        return Verdict.errored(internal_error(error))


def _execute(ctx: Context, form: CheckForm) -> Results:
    table = registry.runs if form.is_run else registry.asserts
    kind = table[form.kind]
    kinds = kind.signature + kind.optional

    def call() -> Any:
        args = [ctx.convert(k, arg) for k, arg in zip(kinds, form.args)]
        return kind.function(ctx, *args)

    if not form.is_run:
        verdict = _guarded(call)
        if form.negated:
            positive = " ".join([form.kind, *(show_sexpr(arg) for arg in form.args)])
            verdict = verdict.negated(f"({positive})")
        return [(form.label, verdict)]

    outcome: List[Results] = []

    def run() -> Verdict:
        outcome.append(call())
        return Verdict.passed()

    failure = _guarded(run)
    if not outcome:
        return [(form.label, failure)]
    return [
        (f"{form.label}: {suffix}" if suffix else form.label, verdict)
        for suffix, verdict in outcome[0]
    ]


def run_checks(doc: WorkbenchDoc, trace: bool = False) -> List[CheckReport]:
    """Executes the assertions and runs of ``doc``, in order."""
    budget = config.session.budget(doc.universe, doc.fuel)
    ctx = Context(doc, budget, trace)
    reports = []
    for form in doc.checks:
        debug_helper.log(f"running {form.label}")
        stopwatch = Stopwatch()
        results = _execute(ctx, form)
        ms = stopwatch.elapsed_ms()
        for name, verdict in results:
            reports.append(CheckReport(name, verdict, budget, ms))
    return reports


def exit_code(reports: Sequence[CheckReport]) -> int:
    """0 only when every check passed: an undecided check counts as a failure."""
    return 0 if all(report.status == "pass" for report in reports) else 1
