"""Realizable endofunctors on Pers.

A functor is given by an expression of the grammar

    id | (const A) | (prod E E) | (exp A E)

from which both its object map and one uniform tracker ``phi`` are
derived: for every morphism tracked by ``x``, ``phi·x`` tracks its image.
The checks below test that property, functoriality, monotonicity and
the behaviour of ``phi`` on the identity code, over a finite lattice.
"""

import functools
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .category import check_tracker, enumerate_homs, tracks
from .kernel.abstraction import lam
from .kernel.combinators import (
    B_TERM,
    FST_TERM,
    IDENTITY,
    PAIR_TERM,
    SND_TERM,
    comp,
    first,
    second,
)
from .kernel.reduction import (
    Converged,
    Fuel,
    OutOfFuel,
    Outcome,
    TrackerFunction,
    run_tracker,
    show_tracker,
)
from .kernel.terms import I, Var, decode, encode, show_code
from .lab_gettext import current_lang, undecided_at_fuel
from .pers import (
    UNDECIDED,
    Budget,
    Key,
    Per,
    check_includes,
    exponential,
    includes,
    product,
)
from .typing_info import Code, Tracker
from .verdicts import Tally, Verdict

_ = current_lang.translate

ObjectMap = Callable[[Per], Per]
ActionKey = Callable[[Tracker, Per, Per, Code], Key]


class FunctorExpr:
    """Base class of functor expressions."""


@dataclass(frozen=True)
class Id(FunctorExpr):
    def __str__(self) -> str:
        return "id"


@dataclass(frozen=True)
class Const(FunctorExpr):
    value: Per

    def __str__(self) -> str:
        return f"(const {self.value})"


@dataclass(frozen=True)
class Prod(FunctorExpr):
    left: FunctorExpr
    right: FunctorExpr

    def __str__(self) -> str:
        return f"(prod {self.left} {self.right})"


@dataclass(frozen=True)
class ExpFrom(FunctorExpr):
    domain: Per
    body: FunctorExpr

    def __str__(self) -> str:
        return f"(exp {self.domain} {self.body})"


@functools.lru_cache(maxsize=4096)
def eval_object(expr: FunctorExpr, per: Per, budget: Budget) -> Per:
    if isinstance(expr, Id):
        return per
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Prod):
        return product(
            eval_object(expr.left, per, budget),
            eval_object(expr.right, per, budget),
            budget,
        )
    if isinstance(expr, ExpFrom):
        return exponential(expr.domain, eval_object(expr.body, per, budget), budget)
    raise TypeError(f"not a functor expression: {expr!r}")


x_var, p_var = Var("x"), Var("p")


@functools.lru_cache(maxsize=None)
def synthesize_tracker(expr: FunctorExpr) -> Code:
    """The uniform tracker of the functor denoted by ``expr``."""
    if isinstance(expr, Id):
        return IDENTITY
    if isinstance(expr, Const):
        return encode(lam("x", I))
    if isinstance(expr, Prod):
        phi_left = decode(synthesize_tracker(expr.left))
        phi_right = decode(synthesize_tracker(expr.right))
        body = PAIR_TERM(
            phi_left(x_var, FST_TERM(p_var)), phi_right(x_var, SND_TERM(p_var))
        )
        return encode(lam("xp", body))
    if isinstance(expr, ExpFrom):
        phi_body = decode(synthesize_tracker(expr.body))
        return encode(lam("x", B_TERM(phi_body(x_var))))
    raise TypeError(f"not a functor expression: {expr!r}")


def reference_action_key(
    expr: FunctorExpr, x: Tracker, source: Per, target: Per, e: Code, budget: Budget
) -> Key:
    """Class, in ``F target``, of the image of ``e`` under ``F([x])``.

    Computed from the meaning of the expression alone, without ``phi``.
    """
    fuel = budget.fuel
    if isinstance(expr, Id):
        outcome = run_tracker(x, e, fuel)
        if isinstance(outcome, OutOfFuel):
            return UNDECIDED
        return target.class_key(outcome.value)
    if isinstance(expr, Const):
        return expr.value.class_key(e)
    if isinstance(expr, Prod):
        a = first(e, fuel)
        b = second(e, fuel)
        if a is None or b is None:
            return UNDECIDED
        keys = (
            reference_action_key(expr.left, x, source, target, a, budget),
            reference_action_key(expr.right, x, source, target, b, budget),
        )
        if any(key is None for key in keys):
            return None
        if any(key is UNDECIDED for key in keys):
            return UNDECIDED
        return keys
    if isinstance(expr, ExpFrom):
        keys_by_block = []
        for block in expr.domain.blocks():
            block_key: Key = None
            for a in block:
                outcome = run_tracker(e, a, fuel)
                if isinstance(outcome, OutOfFuel):
                    return UNDECIDED
                key = reference_action_key(
                    expr.body, x, source, target, outcome.value, budget
                )
                if key is None or key is UNDECIDED:
                    return key
                if block_key is None:
                    block_key = key
                elif key != block_key:
                    return None
            keys_by_block.append(block_key)
        return tuple(keys_by_block)
    raise TypeError(f"not a functor expression: {expr!r}")


class RealizableFunctor:
    """Object map plus uniform tracker.

    ``action_key``, when known, gives the class of ``F([x])(e)`` without
    going through ``phi``; ``check_realizable`` compares the two.
    """

    def __init__(
        self,
        name: str,
        obj_map: ObjectMap,
        phi: Tracker,
        expr: Optional[FunctorExpr] = None,
        action_key: Optional[ActionKey] = None,
    ) -> None:
        self.name = name
        self._obj_map = obj_map
        self.phi = phi
        self.expr = expr
        self.action_key = action_key

    def obj(self, per: Per) -> Per:
        return self._obj_map(per)

    def with_tracker(self, phi: Tracker) -> "RealizableFunctor":
        return RealizableFunctor(self.name, self._obj_map, phi, self.expr, self.action_key)

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"<RealizableFunctor {self.name}>"


def from_expr(
    expr: FunctorExpr,
    budget: Budget,
    name: Optional[str] = None,
    phi: Optional[Tracker] = None,
) -> RealizableFunctor:
    def obj_map(per: Per) -> Per:
        return eval_object(expr, per, budget)

    def action_key(x: Tracker, source: Per, target: Per, e: Code) -> Key:
        return reference_action_key(expr, x, source, target, e, budget)

    return RealizableFunctor(
        name or str(expr),
        obj_map,
        synthesize_tracker(expr) if phi is None else phi,
        expr,
        action_key,
    )


def _apply_phi(functor: RealizableFunctor, x: Tracker, fuel: Fuel) -> Outcome:
    if isinstance(x, TrackerFunction):
        raise TypeError("phi can only be applied to codes")
    return run_tracker(functor.phi, x, fuel)


def _trackers_between(source: Per, target: Per, budget: Budget) -> List[Code]:
    """Representatives of the homs, plus the identity code when it is one."""
    trackers = [m.tracker for m in enumerate_homs(source, target, budget)]
    if IDENTITY not in trackers and tracks(source, target, IDENTITY, budget):
        trackers.append(IDENTITY)
    return trackers  # type: ignore


def _check_action(
    functor: RealizableFunctor,
    x: Code,
    source: Per,
    target: Per,
    budget: Budget,
    tally: Tally,
) -> None:
    """``phi·x`` tracks ``F [x]: F source -> F target`` for a single morphism ``[x]``."""
    fuel = budget.fuel
    outcome = _apply_phi(functor, x, fuel)

    def where() -> str:
        return f"x = {show_code(x)}, {source} -> {target}"

    if isinstance(outcome, OutOfFuel):
        tally.undecided(f"phi·{show_code(x)}: " + undecided_at_fuel(fuel.max_steps))
        return
    image = outcome.value
    f_source, f_target = functor.obj(source), functor.obj(target)
    tracking = check_tracker(f_source, f_target, image, budget)
    if tracking.status == "fail":
        tally.fail(f"{where()}: phi·x = {show_code(image)}: {tracking.witness}")
        return
    tally.add(tracking)
    if functor.action_key is None:
        return
    for e in f_source.carrier():
        result = run_tracker(image, e, fuel)
        if isinstance(result, OutOfFuel):
            tally.undecided(
                f"{where()}: (phi·x)·{show_code(e)}: " + undecided_at_fuel(fuel.max_steps)
            )
            continue
        expected = functor.action_key(x, source, target, e)
        actual = f_target.class_key(result.value)
        if expected is UNDECIDED or actual is UNDECIDED:
            tally.undecided(f"{where()}: class of the image of {show_code(e)}")
        elif expected != actual:
            tally.fail(
                _("{where}: (phi·x)·{e} = {value} is not in the class of F([x])({e})").format(
                    where=where(), e=show_code(e), value=show_code(result.value)
                )
            )
            return
        else:
            tally.ok()


def _check_identity_law(
    functor: RealizableFunctor, per: Per, budget: Budget, tally: Tally
) -> None:
    fuel = budget.fuel
    outcome = _apply_phi(functor, IDENTITY, fuel)
    if isinstance(outcome, OutOfFuel):
        tally.undecided("phi·i: " + undecided_at_fuel(fuel.max_steps))
        return
    f_per = functor.obj(per)
    for e in f_per.carrier():
        result = run_tracker(outcome.value, e, fuel)
        if isinstance(result, OutOfFuel):
            tally.undecided(f"(phi·i)·{show_code(e)}: " + undecided_at_fuel(fuel.max_steps))
        elif f_per.related(result.value, e):
            tally.ok()
        else:
            tally.fail(
                _("F(id) is not the identity on F {per}: (phi·i)·{e} = {value}").format(
                    per=per, e=show_code(e), value=show_code(result.value)
                )
            )
            return


def _check_composition_law(
    functor: RealizableFunctor,
    g: Code,
    f: Code,
    source: Per,
    target: Per,
    budget: Budget,
    tally: Tally,
) -> None:
    fuel = budget.fuel
    composite = _apply_phi(functor, comp(g, f), fuel)
    f_image = _apply_phi(functor, f, fuel)
    g_image = _apply_phi(functor, g, fuel)
    if any(isinstance(o, OutOfFuel) for o in (composite, f_image, g_image)):
        tally.undecided(
            f"phi·({show_code(g)}∘{show_code(f)}): " + undecided_at_fuel(fuel.max_steps)
        )
        return
    assert isinstance(composite, Converged)
    assert isinstance(f_image, Converged) and isinstance(g_image, Converged)
    f_source, f_target = functor.obj(source), functor.obj(target)
    for e in f_source.carrier():
        left = run_tracker(composite.value, e, fuel)
        middle = run_tracker(f_image.value, e, fuel)
        if isinstance(left, OutOfFuel) or isinstance(middle, OutOfFuel):
            where = f"F({show_code(g)}∘{show_code(f)}) at {show_code(e)}"
            tally.undecided(f"{where}: " + undecided_at_fuel(fuel.max_steps))
            continue
        right = run_tracker(g_image.value, middle.value, fuel)
        if isinstance(right, OutOfFuel):
            where = f"F({show_code(g)})F({show_code(f)}) at {show_code(e)}"
            tally.undecided(f"{where}: " + undecided_at_fuel(fuel.max_steps))
        elif f_target.related(left.value, right.value):
            tally.ok()
        else:
            tally.fail(
                _("F(g∘f) differs from F(g)∘F(f) for g = {g}, f = {f} at {e}").format(
                    g=show_code(g), f=show_code(f), e=show_code(e)
                )
            )
            return


def check_realizable(
    functor: RealizableFunctor, lattice: Sequence[Per], budget: Budget
) -> Verdict:
    """The action of ``phi`` and the functor laws over every pair and triple of ``lattice``."""
    tally = Tally()
    homs = {}
    for source in lattice:
        for target in lattice:
            homs[id(source), id(target)] = _trackers_between(source, target, budget)
    for source in lattice:
        _check_identity_law(functor, source, budget, tally)
        if tally.failed:
            return tally.verdict()
        for target in lattice:
            for x in homs[id(source), id(target)]:
                _check_action(functor, x, source, target, budget, tally)
                if tally.failed:
                    return tally.verdict()
    for source in lattice:
        for middle in lattice:
            for target in lattice:
                for f in homs[id(source), id(middle)]:
                    for g in homs[id(middle), id(target)]:
                        _check_composition_law(
                            functor, g, f, source, target, budget, tally
                        )
                        if tally.failed:
                            return tally.verdict()
    return tally.verdict()


def check_monotone(obj_map: ObjectMap, lattice: Sequence[Per]) -> Verdict:
    """``R ⊆ S`` implies ``F R ⊆ F S``; the witness is the offending pair."""
    tally = Tally()
    for smaller in lattice:
        for larger in lattice:
            if not includes(smaller, larger):
                continue
            verdict = check_includes(obj_map(smaller), obj_map(larger))
            if verdict.status == "fail":
                tally.fail(f"({smaller}, {larger})")
                return tally.verdict().with_details(verdict.witness or "")
            tally.add(verdict)
            if verdict.ok:
                tally.ok()
    return tally.verdict()


def identity_image(functor: RealizableFunctor, fuel: Fuel) -> Optional[Code]:
    outcome = _apply_phi(functor, IDENTITY, fuel)
    return outcome.value if isinstance(outcome, Converged) else None


def check_identity_realizer(
    functor: RealizableFunctor, lattice: Sequence[Per], budget: Budget
) -> Verdict:
    """``phi·i`` is extensionally the identity on every ``F R``.

    The details record whether ``phi·i`` is the code ``i`` itself, which
    is stronger and does not hold for every functor.
    """
    tally = Tally()
    for per in lattice:
        _check_identity_law(functor, per, budget, tally)
        if tally.failed:
            break
    image = identity_image(functor, budget.fuel)
    if image == IDENTITY:
        strict = _("phi·i = i as codes")
    elif image is None:
        strict = _("phi·i: ") + undecided_at_fuel(budget.fuel.max_steps)
    else:
        strict = _("phi·i = {code}, not i as a code").format(code=show_code(image))
    return tally.verdict().with_details(strict)


def psi_repair(phi: Tracker) -> TrackerFunction:
    """``psi i = i`` and ``psi x = phi x`` for every other code."""

    def psi(code: Code, fuel: Fuel) -> Outcome:
        if code == IDENTITY:
            return Converged(IDENTITY, 0)
        return run_tracker(phi, code, fuel)

    return TrackerFunction(f"psi({show_tracker(phi)})", psi)


def check_psi_repair(
    functor: RealizableFunctor, lattice: Sequence[Per], budget: Budget
) -> Verdict:
    """The repaired tracker on ``x = i``, for every inclusion of the lattice.

    ``psi·i = i`` must then track ``F R -> F S`` and act as ``F`` of the
    inclusion, which needs ``F R ⊆ F S``.
    """
    repaired = functor.with_tracker(psi_repair(functor.phi))
    tally = Tally()
    for smaller in lattice:
        for larger in lattice:
            if not includes(smaller, larger):
                continue
            _check_action(repaired, IDENTITY, smaller, larger, budget, tally)
            if tally.failed:
                return tally.verdict()
    return tally.verdict()


def contravariant_map(target: Per, budget: Budget) -> ObjectMap:
    """``X ↦ [X -> target]``, which reverses inclusions."""

    def obj_map(per: Per) -> Per:
        return exponential(per, target, budget)

    return obj_map


def search_nonmonotone(
    candidates: Sequence[Tuple[str, ObjectMap]], lattice: Sequence[Per]
) -> Optional[Tuple[str, str]]:
    """First candidate object map that is not monotone, with its witness."""
    for name, obj_map in candidates:
        verdict = check_monotone(obj_map, lattice)
        if verdict.status == "fail":
            assert verdict.witness is not None
            return name, verdict.witness
    return None
