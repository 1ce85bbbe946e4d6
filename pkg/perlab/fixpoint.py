"""Least fixpoints of monotone functors.

``kleene_lfp`` climbs the chain ``∅ ⊆ F∅ ⊆ FF∅ ⊆ ...`` until two
consecutive iterates are the same relation. ``brute_lfp`` takes the
definition literally, intersecting every pre-fixed point ``F R ⊆ R``
found among the Pers on at most three codes, and serves as an oracle.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import config, debug_helper
from .category import check_tracker
from .errors import NoFixpointError, NotMonotoneError
from .functors import RealizableFunctor
from .kernel.combinators import IDENTITY
from .lab_gettext import current_lang
from .pers import (
    Budget,
    Per,
    all_pers_on,
    check_includes,
    empty_per,
    includes,
    intersect,
)
from .typing_info import Code
from .verdicts import Verdict, merge

_ = current_lang.translate

MAX_BRUTE_CODES = 3


@dataclass
class FixpointResult:
    fixobject: Per
    iterations: int
    trace: List[Per] = field(repr=False)
    fixmap_verified: bool
    budget: Budget

    def describe_trace(self) -> List[str]:
        lines = []
        for index, per in enumerate(self.trace):
            lines.append(
                _("X{index}: {size} codes in {classes} classes").format(
                    index=index, size=len(per.carrier()), classes=len(per.blocks())
                )
            )
        return lines


def verify_fixmap(functor: RealizableFunctor, per: Per, budget: Budget) -> Verdict:
    """``F X = X`` as relations, with the code ``i`` tracking both directions."""
    image = functor.obj(per)
    verdicts = [
        check_includes(image, per),
        check_includes(per, image),
        check_tracker(image, per, IDENTITY, budget),
        check_tracker(per, image, IDENTITY, budget),
    ]
    return merge(verdicts)


def kleene_lfp(
    functor: RealizableFunctor, budget: Budget, max_iter: Optional[int] = None
) -> FixpointResult:
    if max_iter is None:
        max_iter = config.session.max_iter
    current: Per = empty_per()
    trace = [current]
    for iteration in range(1, max_iter + 1):
        following = functor.obj(current)
        step = check_includes(current, following)
        if not step.ok:
            raise NotMonotoneError(
                _("{functor} is not monotone: X{k} is not included in X{n}.").format(
                    functor=functor, k=iteration - 1, n=iteration
                ),
                step.witness,
            )
        trace.append(following)
        debug_helper.log(f"{functor}: X{iteration} has {len(following.carrier())} codes")
        if includes(following, current):
            verified = verify_fixmap(functor, current, budget).ok
            return FixpointResult(current, iteration, trace, verified, budget)
        current = following
    raise NoFixpointError(
        _("No fixpoint at this budget: {functor} did not stabilise in {n} steps.").format(
            functor=functor, n=max_iter
        ),
        max_iter,
    )


def pre_fixed_points(functor: RealizableFunctor, codes: Sequence[Code]) -> List[Per]:
    return [per for per in all_pers_on(codes) if includes(functor.obj(per), per)]


def brute_lfp(
    functor: RealizableFunctor, tiny_universe: Sequence[Code], budget: Budget
) -> Optional[Per]:
    """``⋂{R | F R ⊆ R}`` over the Pers on ``tiny_universe``.

    Returns None when none of them is a pre-fixed point.
    """
    if len(set(tiny_universe)) > MAX_BRUTE_CODES:
        raise ValueError(
            _("brute_lfp enumerates Pers on at most {n} codes.").format(n=MAX_BRUTE_CODES)
        )
    candidates = pre_fixed_points(functor, tiny_universe)
    if not candidates:
        return None
    return intersect(candidates)
