"""The category of Pers: tracked morphisms, composition, identities,
extensional equality and isomorphisms, all relative to a Budget."""

from dataclasses import dataclass
from typing import List, Optional

from .errors import BudgetMismatchError, CategoryError
from .kernel.combinators import IDENTITY, comp
from .kernel.reduction import (
    Fuel,
    OutOfFuel,
    Outcome,
    TrackerFunction,
    run_tracker,
    show_tracker,
)
from .kernel.terms import show_code
from .lab_gettext import current_lang, undecided_at_fuel
from .pers import UNDECIDED, Budget, Per, check_budget, exponential, same_relation
from .typing_info import Code, Tracker
from .verdicts import Tally, Verdict

_ = current_lang.translate


@dataclass(frozen=True, eq=False)
class Morphism:
    source: Per
    target: Per
    tracker: Tracker
    budget: Budget

    def __str__(self) -> str:
        return f"[{show_tracker(self.tracker)}]: {self.source} -> {self.target}"


def check_tracker(source: Per, target: Per, tracker: Tracker, budget: Budget) -> Verdict:
    """Does ``tracker`` track a function from ``source`` to ``target``?

    Every code of the source must be sent into the target, and codes of
    the same class must be sent to related codes.
    """
    check_budget(budget, source, target)
    fuel = budget.fuel
    tally = Tally()
    for block in source.blocks():
        first_image: Code = 0
        first_key = None
        for a in block:
            outcome = run_tracker(tracker, a, fuel)
            if isinstance(outcome, OutOfFuel):
                tally.undecided(
                    f"{show_tracker(tracker)}·{show_code(a)}: " + undecided_at_fuel(fuel.max_steps)
                )
                continue
            key = target.class_key(outcome.value)
            if key is None:
                tally.fail(
                    _("{n}·{a} = {value} is not in {target}").format(
                        n=show_tracker(tracker),
                        a=show_code(a),
                        value=show_code(outcome.value),
                        target=target,
                    )
                )
                return tally.verdict()
            if key is UNDECIDED:
                tally.undecided(
                    _("membership of {value} in {target}").format(
                        value=show_code(outcome.value), target=target
                    )
                )
            elif first_key is None:
                first_key = key
                first_image = outcome.value
                tally.ok()
            elif key != first_key:
                tally.fail(
                    _(
                        "{a} and {b} are related in {source} but their images "
                        "{va} and {vb} are not related in {target}"
                    ).format(
                        a=show_code(block[0]),
                        b=show_code(a),
                        source=source,
                        va=show_code(first_image),
                        vb=show_code(outcome.value),
                        target=target,
                    )
                )
                return tally.verdict()
            else:
                tally.ok()
    return tally.verdict()


def tracks(source: Per, target: Per, tracker: Tracker, budget: Budget) -> bool:
    return check_tracker(source, target, tracker, budget).ok


def make_morphism(source: Per, target: Per, tracker: Tracker, budget: Budget) -> Morphism:
    verdict = check_tracker(source, target, tracker, budget)
    if not verdict.ok:
        raise CategoryError(
            _("{n} does not track a morphism {source} -> {target}: {why}").format(
                n=show_tracker(tracker), source=source, target=target, why=verdict.witness
            )
        )
    return Morphism(source, target, tracker, budget)


def identity(per: Per, budget: Budget) -> Morphism:
    return Morphism(per, per, IDENTITY, budget)


def _composite(second: Tracker, first: Tracker) -> Tracker:
    if isinstance(second, TrackerFunction) or isinstance(first, TrackerFunction):

        def run(code: Code, fuel: Fuel) -> Outcome:
            outcome = run_tracker(first, code, fuel)
            if isinstance(outcome, OutOfFuel):
                return outcome
            return run_tracker(second, outcome.value, fuel)

        return TrackerFunction(f"{show_tracker(second)}∘{show_tracker(first)}", run)
    return comp(second, first)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g ∘ f``, tracked by ``COMP(g, f)``."""
    if g.budget != f.budget:
        raise BudgetMismatchError(
            _("Cannot compose morphisms built under {a} and {b}.").format(
                a=g.budget, b=f.budget
            )
        )
    if f.target is not g.source and not same_relation(f.target, g.source):
        raise CategoryError(
            _("Cannot compose {g} after {f}: {tgt} is not {src}.").format(
                g=g, f=f, tgt=f.target, src=g.source
            )
        )
    return make_morphism(f.source, g.target, _composite(g.tracker, f.tracker), f.budget)


def _same(first: Per, second: Per) -> bool:
    return first is second or same_relation(first, second)


def check_equal(f: Morphism, g: Morphism) -> Verdict:
    """Extensional equality: related images for every code of the source."""
    if f.budget != g.budget:
        raise BudgetMismatchError(_("Morphisms built under different budgets."))
    if not (_same(f.source, g.source) and _same(f.target, g.target)):
        raise CategoryError(
            _("Cannot compare {f} with {g}: their endpoints differ.").format(f=f, g=g)
        )
    fuel = f.budget.fuel
    tally = Tally()
    for a in f.source.carrier():
        left = run_tracker(f.tracker, a, fuel)
        right = run_tracker(g.tracker, a, fuel)
        if isinstance(left, OutOfFuel) or isinstance(right, OutOfFuel):
            tally.undecided(f"{show_code(a)}: " + undecided_at_fuel(fuel.max_steps))
            continue
        if f.target.related(left.value, right.value):
            tally.ok()
        else:
            tally.fail(
                _("at {a}: {va} and {vb} are not related in {target}").format(
                    a=show_code(a),
                    va=show_code(left.value),
                    vb=show_code(right.value),
                    target=f.target,
                )
            )
            break
    return tally.verdict()


def equal_morphisms(f: Morphism, g: Morphism) -> bool:
    return check_equal(f, g).ok


def enumerate_homs(source: Per, target: Per, budget: Budget) -> List[Morphism]:
    """One morphism per class of ``[source -> target]``, tracked by its least code."""
    homs = exponential(source, target, budget)
    return [Morphism(source, target, block[0], budget) for block in homs.blocks()]


def hom_count(source: Per, target: Per, budget: Budget) -> int:
    return len(exponential(source, target, budget).blocks())


def _round_trip(first: Tracker, second: Tracker, per: Per, fuel: Fuel) -> bool:
    for a in per.carrier():
        outcome = run_tracker(first, a, fuel)
        if isinstance(outcome, OutOfFuel):
            return False
        back = run_tracker(second, outcome.value, fuel)
        if isinstance(back, OutOfFuel) or not per.related(back.value, a):
            return False
    return True


def is_iso(f: Morphism, budget: Budget) -> Optional[Morphism]:
    """An inverse of ``f`` among the homs of the budget, or None.

    None only means that no inverse was found at this budget.
    """
    if len(f.source.blocks()) != len(f.target.blocks()):
        return None
    fuel = budget.fuel
    for g in enumerate_homs(f.target, f.source, budget):
        if _round_trip(f.tracker, g.tracker, f.source, fuel) and _round_trip(
            g.tracker, f.tracker, f.target, fuel
        ):
            return g
    return None
