"""Natural transformations between realizable functors, hom-functors,
and the monotone functor ``F* X = nat(hom(X, -), F)``.

The quantifier "for all Pers R" in the definition of a natural
transformation is relativised to a finite family, which every result
carries with it.
"""

import functools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .category import check_tracker, enumerate_homs
from .errors import CategoryError
from .functors import (
    ExpFrom,
    Id,
    RealizableFunctor,
    check_monotone,
    check_realizable,
    from_expr,
)
from .kernel.abstraction import lam
from .kernel.combinators import B, B_TERM
from .kernel.reduction import (
    OutOfFuel,
    TrackerFunction,
    run_chain,
    run_tracker,
    value_of,
)
from .kernel.terms import I, Var, decode, encode, show_code
from .lab_gettext import current_lang, undecided_at_fuel
from .pers import UNDECIDED, Budget, DerivedPer, Key, Per, exponential, includes
from .typing_info import Code
from .verdicts import Tally, Verdict, merge

_ = current_lang.translate


class NatPer(DerivedPer):
    """Codes ``e`` with ``e ∈ [F R -> G R]`` for every ``R`` of the family,
    natural with respect to every hom between family members.

    The candidates are the codes of the budget universe and the ``seeds``.
    """

    def __init__(
        self,
        source: RealizableFunctor,
        target: RealizableFunctor,
        family: Sequence[Per],
        budget: Budget,
        seeds: Iterable[Code] = (),
    ) -> None:
        super().__init__(f"nat({source}, {target})", budget)
        self.source = source
        self.target = target
        self.family = list(family)
        self.seeds = tuple(seeds)
        self._squares: Optional[List[Tuple[Per, Per, Optional[Code], Optional[Code]]]] = None

    @property
    def squares(self) -> List[Tuple[Per, Per, Optional[Code], Optional[Code]]]:
        """``(R, S, phi_F·f, phi_G·f)`` for every hom ``f: R -> S``;
        None stands for an image that ran out of fuel."""
        if self._squares is None:
            assert self.budget is not None
            squares = []
            for r in self.family:
                for s in self.family:
                    for hom in enumerate_homs(r, s, self.budget):
                        f_lifted = run_tracker(self.source.phi, hom.tracker, self.fuel)
                        g_lifted = run_tracker(self.target.phi, hom.tracker, self.fuel)
                        squares.append(
                            (
                                r,
                                s,
                                value_of(f_lifted),
                                value_of(g_lifted),
                            )
                        )
            self._squares = squares
        return self._squares

    def candidates(self) -> Iterable[Code]:
        assert self.budget is not None
        return dict.fromkeys([*self.budget.universe, *self.seeds])

    def compute_key(self, code: Code) -> Key:
        assert self.budget is not None
        keys = []
        undecided = False
        for per in self.family:
            component = exponential(self.source.obj(per), self.target.obj(per), self.budget)
            key = component.class_key(code)
            if key is None:
                return None
            if key is UNDECIDED:
                undecided = True
            keys.append(key)
        for r, s, f_lifted, g_lifted in self.squares:
            if f_lifted is None or g_lifted is None:
                undecided = True
                continue
            g_s = self.target.obj(s)
            for x in self.source.obj(r).carrier():
                # G(f)(e x)  versus  e(F(f) x)
                left = run_chain(self.fuel, code, x)
                if not isinstance(left, OutOfFuel):
                    left = run_tracker(g_lifted, left.value, self.fuel)
                right = run_tracker(f_lifted, x, self.fuel)
                if not isinstance(right, OutOfFuel):
                    right = run_tracker(code, right.value, self.fuel)
                if isinstance(left, OutOfFuel) or isinstance(right, OutOfFuel):
                    undecided = True
                elif not g_s.related(left.value, right.value):
                    return None
        if undecided:
            return UNDECIDED
        return tuple(keys)


@dataclass(frozen=True, eq=False)
class NatTransPer:
    source: RealizableFunctor
    target: RealizableFunctor
    per: NatPer
    family: Tuple[Per, ...]
    budget: Budget


@functools.lru_cache(maxsize=1024)
def _nat_per(
    source: RealizableFunctor,
    target: RealizableFunctor,
    family: Tuple[Per, ...],
    budget: Budget,
) -> NatTransPer:
    return NatTransPer(source, target, NatPer(source, target, family, budget), family, budget)


def nat_per(
    source: RealizableFunctor,
    target: RealizableFunctor,
    family: Sequence[Per],
    budget: Budget,
) -> NatTransPer:
    return _nat_per(source, target, tuple(family), budget)


@functools.lru_cache(maxsize=1024)
def hom_functor(per: Per, budget: Budget) -> RealizableFunctor:
    """``hom(X, -)``: post-composition, tracked by ``B`` since ``B n g = n ∘ g``."""
    return from_expr(ExpFrom(per, Id()), budget, name=f"hom({per}, -)", phi=B)


n_var, e_var, g_var, x_var = Var("n"), Var("e"), Var("g"), Var("x")

# λn e g. e (g ∘ n): a morphism n: X -> Y sends the transformation e at X
# to the one at Y
STAR_TRACKER: Code = encode(lam([n_var, e_var, g_var], e_var(B_TERM(g_var, n_var))))

BACK_TRACKER: Code = encode(lam([e_var], e_var(I)))


def star_functor(
    functor: RealizableFunctor, family: Sequence[Per], budget: Budget
) -> RealizableFunctor:
    """``F* X = nat(hom(X, -), F)``, monotone because ``hom`` reverses inclusions.

    Besides the budget universe, ``F* X`` is searched among the images of
    ``F X`` under the forward map, whose codes are too large for the universe.
    """
    family = tuple(family)
    cache: Dict[int, Per] = {}

    def obj_map(per: Per) -> Per:
        if id(per) not in cache:
            seeds = forward_images(functor, per, budget)
            cache[id(per)] = NatPer(hom_functor(per, budget), functor, family, budget, seeds)
        return cache[id(per)]

    return RealizableFunctor(f"{functor}*", obj_map, STAR_TRACKER)


def forward_tracker(functor: RealizableFunctor) -> Code:
    """Code of ``λx g. (phi g) x``."""
    if isinstance(functor.phi, TrackerFunction):
        raise CategoryError(
            _("The Yoneda map needs a tracker given as a code, not {phi}.").format(
                phi=functor.phi
            )
        )
    return encode(lam([x_var, g_var], decode(functor.phi)(g_var, x_var)))


def forward_images(functor: RealizableFunctor, per: Per, budget: Budget) -> List[Code]:
    if isinstance(functor.phi, TrackerFunction):
        return []
    forward = forward_tracker(functor)
    images = (
        value_of(run_chain(budget.fuel, forward, code)) for code in functor.obj(per).carrier()
    )
    return [image for image in images if image is not None]


@dataclass(frozen=True)
class YonedaIso:
    forward: Code
    back: Code
    verdict: Verdict


def _round_trip(
    first: Code, second: Code, per: Per, budget: Budget, label: str, tally: Tally
) -> None:
    fuel = budget.fuel
    for code in per.carrier():
        outcome = run_chain(fuel, first, code)
        if not isinstance(outcome, OutOfFuel):
            outcome = run_tracker(second, outcome.value, fuel)
        if isinstance(outcome, OutOfFuel):
            tally.undecided(f"{label} at {show_code(code)}: " + undecided_at_fuel(fuel.max_steps))
        elif per.related(outcome.value, code):
            tally.ok()
        else:
            tally.fail(
                _("{label} is not the identity at {code}: got {value}").format(
                    label=label, code=show_code(code), value=show_code(outcome.value)
                )
            )
            return


def yoneda_iso(
    functor: RealizableFunctor,
    per: Per,
    family: Sequence[Per],
    budget: Budget,
    star: Optional[RealizableFunctor] = None,
) -> YonedaIso:
    """``F X ≅ F* X``, with both round trips and naturality in ``X``.

    When the two sides do not have as many classes at the budget, the iso
    is at best undecided.
    """
    if all(per is not member for member in family):
        raise CategoryError(_("{per} must belong to the family.").format(per=per))
    if star is None:
        star = star_functor(functor, family, budget)
    forward = forward_tracker(functor)
    f_per, star_per = functor.obj(per), star.obj(per)
    verdicts = [
        check_tracker(f_per, star_per, forward, budget),
        check_tracker(star_per, f_per, BACK_TRACKER, budget),
    ]
    tally = Tally()
    _round_trip(forward, BACK_TRACKER, f_per, budget, "back ∘ forward", tally)
    if not tally.failed:
        _round_trip(BACK_TRACKER, forward, star_per, budget, "forward ∘ back", tally)
    if not tally.failed and len(star_per.blocks()) != len(f_per.blocks()):
        tally.undecided(
            _("{star} has {n} classes and {image} has {m} at {budget}").format(
                star=star_per,
                n=len(star_per.blocks()),
                image=f_per,
                m=len(f_per.blocks()),
                budget=budget,
            )
        )
    verdicts.append(tally.verdict())
    verdicts.append(_check_naturality(functor, star, per, family, budget))
    return YonedaIso(forward, BACK_TRACKER, merge(verdicts))


def _check_naturality(
    functor: RealizableFunctor,
    star: RealizableFunctor,
    per: Per,
    family: Sequence[Per],
    budget: Budget,
) -> Verdict:
    """``F(f) ∘ back = back ∘ F*(f)`` for every hom ``f: X -> Y`` of the family."""
    fuel = budget.fuel
    tally = Tally()
    star_per = star.obj(per)
    for other in family:
        f_other = functor.obj(other)
        for hom in enumerate_homs(per, other, budget):
            lifted = run_tracker(functor.phi, hom.tracker, fuel)
            moved = run_tracker(star.phi, hom.tracker, fuel)
            if isinstance(lifted, OutOfFuel) or isinstance(moved, OutOfFuel):
                tally.undecided(f"{hom}: " + undecided_at_fuel(fuel.max_steps))
                continue
            for e in star_per.carrier():
                left = run_chain(fuel, BACK_TRACKER, e)
                if not isinstance(left, OutOfFuel):
                    left = run_tracker(lifted.value, left.value, fuel)
                right = run_chain(fuel, moved.value, e)
                if not isinstance(right, OutOfFuel):
                    right = run_tracker(BACK_TRACKER, right.value, fuel)
                if isinstance(left, OutOfFuel) or isinstance(right, OutOfFuel):
                    tally.undecided(f"{hom} at {show_code(e)}: " + undecided_at_fuel(fuel.max_steps))
                elif f_other.related(left.value, right.value):
                    tally.ok()
                else:
                    tally.fail(
                        _("the iso is not natural along {hom} at {e}").format(hom=hom, e=show_code(e))
                    )
                    return tally.verdict()
    return tally.verdict()


@dataclass(frozen=True)
class MonotonizeReport:
    functor: Verdict
    star: Verdict
    star_realizable: Verdict
    iso: Verdict


def check_hom_antimonotone(lattice: Sequence[Per], budget: Budget) -> Verdict:
    """``X ⊆ Y`` implies ``hom(Y, R) ⊆ hom(X, R)`` for every ``R``."""
    tally = Tally()
    for smaller in lattice:
        for larger in lattice:
            if not includes(smaller, larger):
                continue
            for per in lattice:
                if includes(exponential(larger, per, budget), exponential(smaller, per, budget)):
                    tally.ok()
                else:
                    tally.fail(f"hom({larger}, {per}) ⊄ hom({smaller}, {per})")
                    return tally.verdict()
    return tally.verdict()


def monotonize(
    functor: RealizableFunctor,
    family: Sequence[Per],
    budget: Budget,
    lattice: Optional[Sequence[Per]] = None,
) -> MonotonizeReport:
    """Monotonicity of ``F`` and of ``F*``, the functor laws of ``F*``, and
    the iso between them."""
    if lattice is None:
        lattice = family
    star = star_functor(functor, family, budget)
    iso = merge(yoneda_iso(functor, per, family, budget, star).verdict for per in family)
    return MonotonizeReport(
        check_monotone(functor.obj, lattice),
        check_monotone(star.obj, lattice),
        check_realizable(star, family, budget),
        iso,
    )
