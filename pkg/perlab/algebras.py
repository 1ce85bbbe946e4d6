"""F-algebras and the initial algebra built from a finite family of them.

An algebra is a carrier ``R`` and a structure code ``a`` tracking
``F R -> R``. Given a family of algebras, ``R0`` is carried by the codes
``f`` whose evaluations ``f·a`` land in the family's carriers and agree
along every algebra morphism of the family; it is structured by

    c = λx a. a ((phi (λf. f a)) x)

and the evaluations ``π_a = λf. f a`` are the mediating morphisms.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .category import Morphism, check_equal, check_tracker, enumerate_homs
from .errors import CategoryError
from .functors import RealizableFunctor
from .kernel.abstraction import abstract, lam
from .kernel.reduction import (
    OutOfFuel,
    TrackerFunction,
    run_chain,
    run_tracker,
    show_tracker,
)
from .kernel.terms import I, K, S, Var, decode, encode, show_code
from .lab_gettext import current_lang, undecided_at_fuel
from .pers import (
    UNDECIDED,
    Budget,
    DerivedPer,
    Key,
    Per,
    check_includes,
    exponential,
    intersect,
)
from .typing_info import Code, Tracker
from .verdicts import Tally, Verdict, merge

_ = current_lang.translate


@dataclass(frozen=True, eq=False)
class Algebra:
    functor: RealizableFunctor
    carrier: Per
    structure: Code
    name: Optional[str] = None

    def __str__(self) -> str:
        return self.name or f"({self.carrier}, {show_code(self.structure)})"


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    source: Algebra
    target: Algebra
    map: Morphism


def make_algebra(
    functor: RealizableFunctor,
    carrier: Per,
    structure: Code,
    budget: Budget,
    name: Optional[str] = None,
) -> Algebra:
    verdict = check_tracker(functor.obj(carrier), carrier, structure, budget)
    if not verdict.ok:
        raise CategoryError(
            _("{code} is not an algebra structure on {carrier}: {why}").format(
                code=show_code(structure), carrier=carrier, why=verdict.witness
            )
        )
    return Algebra(functor, carrier, structure, name)


def enumerate_algebras(functor: RealizableFunctor, carrier: Per, budget: Budget) -> List[Algebra]:
    """One algebra per class of ``[F R -> R]``."""
    return [
        Algebra(functor, carrier, hom.tracker)  # type: ignore
        for hom in enumerate_homs(functor.obj(carrier), carrier, budget)
    ]


def check_square(
    functor: RealizableFunctor,
    source: Algebra,
    target: Algebra,
    m: Tracker,
    budget: Budget,
) -> Verdict:
    """``m ∘ a = b ∘ F(m)`` on every code of ``F source.carrier``."""
    fuel = budget.fuel
    tally = Tally()
    if isinstance(m, TrackerFunction):
        raise CategoryError(_("Algebra morphisms are tracked by codes."))
    lifted = run_tracker(functor.phi, m, fuel)
    if isinstance(lifted, OutOfFuel):
        tally.undecided(f"phi·{show_tracker(m)}: " + undecided_at_fuel(fuel.max_steps))
        return tally.verdict()
    for e in functor.obj(source.carrier).carrier():
        left = run_chain(fuel, source.structure, e)
        if not isinstance(left, OutOfFuel):
            left = run_tracker(m, left.value, fuel)
        right = run_tracker(lifted.value, e, fuel)
        if not isinstance(right, OutOfFuel):
            right = run_tracker(target.structure, right.value, fuel)
        if isinstance(left, OutOfFuel) or isinstance(right, OutOfFuel):
            tally.undecided(f"{show_code(e)}: " + undecided_at_fuel(fuel.max_steps))
        elif target.carrier.related(left.value, right.value):
            tally.ok()
        else:
            tally.fail(
                _("the square for {m}: {source} -> {target} fails at {e}").format(
                    m=show_tracker(m), source=source, target=target, e=show_code(e)
                )
            )
            break
    return tally.verdict()


def is_algebra_morphism(
    functor: RealizableFunctor, source: Algebra, target: Algebra, m: Tracker, budget: Budget
) -> bool:
    return (
        check_tracker(source.carrier, target.carrier, m, budget).ok
        and check_square(functor, source, target, m, budget).ok
    )


def enumerate_algebra_morphisms(
    functor: RealizableFunctor, source: Algebra, target: Algebra, budget: Budget
) -> List[AlgebraMorphism]:
    return [
        AlgebraMorphism(source, target, hom)
        for hom in enumerate_homs(source.carrier, target.carrier, budget)
        if check_square(functor, source, target, hom.tracker, budget).ok
    ]


class LimitPer(DerivedPer):
    """``R0`` relative to a family of algebras.

    The key of ``f`` has one entry per family member ``(T, c)``: the class
    in ``T`` shared by every ``m·(f·a)`` with ``m: (R, a) -> (T, c)`` an
    algebra morphism of the family. ``f·a`` must also lie in ``R``.
    """

    def __init__(self, functor: RealizableFunctor, family: Sequence[Algebra], budget: Budget):
        super().__init__("R0", budget)
        self.functor = functor
        self.family = list(family)
        self._arrows: Optional[List[List[Tuple[Algebra, Code]]]] = None

    @property
    def arrows(self) -> List[List[Tuple[Algebra, Code]]]:
        """For each member, the algebra morphisms into it from the family."""
        if self._arrows is None:
            assert self.budget is not None
            self._arrows = [
                [
                    (source, arrow.map.tracker)  # type: ignore
                    for source in self.family
                    for arrow in enumerate_algebra_morphisms(
                        self.functor, source, target, self.budget
                    )
                ]
                for target in self.family
            ]
        return self._arrows

    def compute_key(self, code: Code) -> Key:
        keys = []
        undecided = False
        evaluations: Dict[int, Optional[Code]] = {}
        for index, source in enumerate(self.family):
            outcome = run_tracker(code, source.structure, self.fuel)
            if isinstance(outcome, OutOfFuel):
                undecided = True
                evaluations[index] = None
                continue
            membership = source.carrier.class_key(outcome.value)
            if membership is None:
                return None
            if membership is UNDECIDED:
                undecided = True
            evaluations[index] = outcome.value
        positions = {id(source): index for index, source in enumerate(self.family)}
        for target, arrows in zip(self.family, self.arrows):
            agreed: Key = None
            for source, m in arrows:
                value = evaluations[positions[id(source)]]
                if value is None:
                    continue
                image = run_tracker(m, value, self.fuel)
                if isinstance(image, OutOfFuel):
                    undecided = True
                    continue
                key = target.carrier.class_key(image.value)
                if key is None:
                    return None
                if key is UNDECIDED:
                    undecided = True
                elif agreed is None:
                    agreed = key
                elif key != agreed:
                    return None
            keys.append(agreed)
        if undecided:
            return UNDECIDED
        return tuple(keys)


def r0_approx(functor: RealizableFunctor, family: Sequence[Algebra], budget: Budget) -> LimitPer:
    if not family:
        raise CategoryError(_("The family of algebras cannot be empty."))
    return LimitPer(functor, family, budget)


f_var, x_var, a_var = Var("f"), Var("x"), Var("a")


def projection(algebra: Algebra) -> Code:
    """Code of ``λf. f a``."""
    return encode(abstract(f_var, f_var(decode(algebra.structure))))


def structure_map_c(functor: RealizableFunctor) -> Code:
    """Code of ``λx a. a ((phi (λf. f a)) x)``; the projection is built
    inside the abstraction, from the variable ``a``."""
    if isinstance(functor.phi, TrackerFunction):
        raise CategoryError(
            _("The structure map needs a tracker given as a code, not {phi}.").format(
                phi=functor.phi
            )
        )
    inner_projection = S(I, K(a_var))
    body = a_var(decode(functor.phi)(inner_projection, x_var))
    return encode(lam([x_var, a_var], body))


def limit_algebra(functor: RealizableFunctor, family: Sequence[Algebra], budget: Budget) -> Algebra:
    return Algebra(functor, r0_approx(functor, family, budget), structure_map_c(functor), "(R0, c)")


def check_cone(
    functor: RealizableFunctor,
    family: Sequence[Algebra],
    budget: Budget,
    r0: Optional[Per] = None,
) -> Verdict:
    """Every projection is a morphism ``R0 -> R``, and ``m ∘ π_a = π_c``
    for every algebra morphism ``m: (R, a) -> (T, c)`` of the family."""
    if r0 is None:
        r0 = r0_approx(functor, family, budget)
    fuel = budget.fuel
    verdicts = [check_tracker(r0, member.carrier, projection(member), budget) for member in family]
    tally = Tally()
    for source in family:
        for target in family:
            for arrow in enumerate_algebra_morphisms(functor, source, target, budget):
                for f in r0.carrier():
                    left = run_chain(fuel, projection(source), f)
                    if not isinstance(left, OutOfFuel):
                        left = run_tracker(arrow.map.tracker, left.value, fuel)
                    right = run_chain(fuel, projection(target), f)
                    if isinstance(left, OutOfFuel) or isinstance(right, OutOfFuel):
                        tally.undecided(f"{show_code(f)}: " + undecided_at_fuel(fuel.max_steps))
                    elif target.carrier.related(left.value, right.value):
                        tally.ok()
                    else:
                        tally.fail(
                            _("m ∘ π differs from π for m = {m}: {src} -> {tgt}, at {f}").format(
                                m=show_tracker(arrow.map.tracker), src=source, tgt=target, f=show_code(f)
                            )
                        )
                        break
    verdicts.append(tally.verdict())
    return merge(verdicts)


def check_structure_map(
    functor: RealizableFunctor,
    family: Sequence[Algebra],
    budget: Budget,
    r0: Optional[Per] = None,
) -> Verdict:
    """``c`` tracks ``F R0 -> R0`` and ``(c x a, a(F(π_a) y)) ∈ R`` for all
    related ``x, y`` of ``F R0`` and every family member ``(R, a)``."""
    if r0 is None:
        r0 = r0_approx(functor, family, budget)
    c = structure_map_c(functor)
    f_r0 = functor.obj(r0)
    fuel = budget.fuel
    verdicts = [check_tracker(f_r0, r0, c, budget)]
    tally = Tally()
    for member in family:
        lifted = run_tracker(functor.phi, projection(member), fuel)
        if isinstance(lifted, OutOfFuel):
            tally.undecided("phi·π: " + undecided_at_fuel(fuel.max_steps))
            continue
        for block in f_r0.blocks():
            left = run_chain(fuel, c, block[0], member.structure)
            for y in block:
                right = run_chain(fuel, lifted.value, y)
                if not isinstance(right, OutOfFuel):
                    right = run_tracker(member.structure, right.value, fuel)
                if isinstance(left, OutOfFuel) or isinstance(right, OutOfFuel):
                    tally.undecided(f"{show_code(y)}: " + undecided_at_fuel(fuel.max_steps))
                elif member.carrier.related(left.value, right.value):
                    tally.ok()
                else:
                    tally.fail(
                        _("the square of c fails for {member} at ({x}, {y})").format(
                            member=member, x=show_code(block[0]), y=show_code(y)
                        )
                    )
                    break
            if tally.failed:
                break
    verdicts.append(tally.verdict())
    return merge(verdicts)


def check_initiality(functor: RealizableFunctor, family: Sequence[Algebra], budget: Budget) -> Verdict:
    """For every member ``(R, a)``: ``π_a`` is an algebra morphism out of
    ``(R0, c)``, and the only one among the homs ``R0 -> R``."""
    limit = limit_algebra(functor, family, budget)
    verdicts = [check_structure_map(functor, family, budget, limit.carrier)]
    for member in family:
        pi = projection(member)
        existence = merge(
            [
                check_tracker(limit.carrier, member.carrier, pi, budget),
                check_square(functor, limit, member, pi, budget),
            ]
        )
        if not existence.ok:
            verdicts.append(
                Verdict(
                    existence.status,
                    _("π for {member} is not an algebra morphism: {why}").format(
                        member=member, why=existence.witness
                    ),
                    existence.checked,
                    existence.excluded_by_fuel,
                )
            )
            continue
        # pi itself may lie outside the universe; any mediating hom found
        # there must agree with it
        pi_morphism = Morphism(limit.carrier, member.carrier, pi, budget)
        checked = existence.checked
        for hom in enumerate_homs(limit.carrier, member.carrier, budget):
            if not check_square(functor, limit, member, hom.tracker, budget).ok:
                continue
            checked += 1
            same = check_equal(hom, pi_morphism)
            if same.status == "fail":
                verdicts.append(
                    Verdict.failed(
                        _("{hom} and π are two mediating morphisms into {member}").format(
                            hom=show_tracker(hom.tracker), member=member
                        ),
                        checked,
                    )
                )
                break
            if same.status == "undecided":
                verdicts.append(same)
        else:
            verdicts.append(Verdict.passed(checked))
    return merge(verdicts)


@dataclass(frozen=True)
class DinReport:
    equal: bool
    witness: Optional[str]


def din_experiment(functor: RealizableFunctor, family: Sequence[Algebra], budget: Budget) -> DinReport:
    """Compares ``R0`` with ``⋂ [[F R -> R] -> R]`` over the family's carriers.

    Informational only; neither outcome is a failure.
    """
    r0 = r0_approx(functor, family, budget)
    carriers: List[Per] = []
    for member in family:
        if all(member.carrier is not seen for seen in carriers):
            carriers.append(member.carrier)
    meet = intersect(
        [
            exponential(exponential(functor.obj(carrier), carrier, budget), carrier, budget)
            for carrier in carriers
        ]
    )
    forward = check_includes(r0, meet)
    if not forward.ok:
        return DinReport(False, forward.witness)
    backward = check_includes(meet, r0)
    if not backward.ok:
        return DinReport(False, backward.witness)
    return DinReport(True, None)
