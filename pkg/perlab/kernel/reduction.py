"""Fuel-bounded weak reduction: the application ``nm`` of the workbench.

``apply(n, m, fuel)`` reduces ``App(decode(n), decode(m))`` with the rules

    I x     -> x
    K x y   -> x
    S f g x -> f x (g x)

always contracting the leftmost-outermost redex, until no redex is left
anywhere in the term. Under-applied constants are normal forms. Each
contraction costs one step; when the steps run out, or when an
intermediate term grows beyond ``MAX_TERM_NODES`` nodes, the outcome is
``OutOfFuel``. Running out of fuel is an outcome, never an exception.
"""

import functools
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, Union

from .. import config
from ..typing_info import Code, Tracker
from .terms import App, I, K, S, Term, decode, encode, show_code, spine

MAX_TERM_NODES = 10**6
MEMO_SIZE = 1 << 18


@dataclass(frozen=True)
class Fuel:
    max_steps: int

    def __post_init__(self) -> None:
        if self.max_steps < 1:
            raise ValueError(f"fuel must allow at least one step, not {self.max_steps}")


@dataclass(frozen=True)
class Converged:
    value: Code
    steps: int


@dataclass(frozen=True)
class OutOfFuel:
    def __repr__(self) -> str:
        return "OutOfFuel"


OUT_OF_FUEL = OutOfFuel()

Outcome = Union[Converged, OutOfFuel]
FuelLike = Union[Fuel, int]


def _steps(fuel: FuelLike) -> int:
    if isinstance(fuel, Fuel):
        return fuel.max_steps
    return Fuel(fuel).max_steps


def _contract(head: Term, args: List[Term]) -> Optional[Term]:
    """One step at the head of the spine, or None when the head is normal."""
    n = len(args)
    if head is I and n >= 1:
        return args[0](*args[1:])
    if head is K and n >= 2:
        return args[0](*args[2:])
    if head is S and n >= 3:
        f, g, x = args[0], args[1], args[2]
        return App(App(f, x), App(g, x))(*args[3:])
    return None


def reduce_term(term: Term, max_steps: int) -> Optional[Tuple[Term, int]]:
    """Normal form of ``term`` and the number of steps taken, or None
    when the budget is exhausted."""
    steps = 0
    # frame: (original term, head, arguments, normalised arguments so far)
    frames: List[Tuple[Term, Term, List[Term], List[Term]]] = []
    current = term
    while True:
        head, args = spine(current)
        contracted = _contract(head, args)
        while contracted is not None:
            steps += 1
            if steps > max_steps or contracted.size > MAX_TERM_NODES:
                return None
            current = contracted
            head, args = spine(current)
            contracted = _contract(head, args)

        if args:
            frames.append((current, head, args, []))
            current = args[0]
            continue

        result: Term = head
        while frames:
            original, frame_head, frame_args, done = frames[-1]
            done.append(result)
            if len(done) < len(frame_args):
                current = frame_args[len(done)]
                break
            frames.pop()
            if all(new is old for new, old in zip(done, frame_args)):
                result = original  # keeps the cached code
            else:
                result = frame_head(*done)
        else:
            return result, steps


def normalize(term: Term, fuel: FuelLike) -> Outcome:
    reduced = reduce_term(term, _steps(fuel))
    if reduced is None:
        return OUT_OF_FUEL
    normal_form, steps = reduced
    return Converged(encode(normal_form), steps)


_decode = functools.lru_cache(maxsize=MEMO_SIZE)(decode)


def _apply(n: Code, m: Code, max_steps: int) -> Outcome:
    reduced = reduce_term(App(_decode(n), _decode(m)), max_steps)
    if reduced is None:
        return OUT_OF_FUEL
    normal_form, steps = reduced
    return Converged(encode(normal_form), steps)


_apply_memo = functools.lru_cache(maxsize=MEMO_SIZE)(_apply)


def apply(n: Code, m: Code, fuel: FuelLike) -> Outcome:
    """The juxtaposition ``nm``: code ``n`` applied to code ``m``.

    The memo table is keyed by ``(n, m, max_steps)`` and can be switched
    off with ``config.session.set_memoize(False)``; results are the same
    either way.
    """
    steps = _steps(fuel)
    if config.session.memoize:
        return _apply_memo(n, m, steps)
    return _apply(n, m, steps)


def clear_memo() -> None:
    _apply_memo.cache_clear()
    _decode.cache_clear()


class TrackerFunction:
    """A tracker given as a host-level function instead of a code.

    Used when a tracker is defined by a case split on the index it
    receives, which combinatory terms without numerals cannot express.
    """

    def __init__(self, label: str, function: Callable[[Code, Fuel], Outcome]) -> None:
        self.label = label
        self._function = function

    def __call__(self, code: Code, fuel: FuelLike) -> Outcome:
        return self._function(code, fuel if isinstance(fuel, Fuel) else Fuel(fuel))

    def __repr__(self) -> str:
        return f"<tracker {self.label}>"


def run_tracker(tracker: Tracker, m: Code, fuel: FuelLike) -> Outcome:
    """Applies a tracker, whichever representation it has."""
    if isinstance(tracker, TrackerFunction):
        return tracker(m, fuel)
    return apply(tracker, m, fuel)


def run_chain(fuel: FuelLike, tracker: Tracker, *args: Code) -> Outcome:
    """``((tracker a1) a2) ...``, each application with its own fuel."""
    outcome: Outcome = Converged(0, 0)
    current: Tracker = tracker
    if not args:
        raise ValueError("run_chain needs at least one argument")
    for arg in args:
        outcome = run_tracker(current, arg, fuel)
        if isinstance(outcome, OutOfFuel):
            return outcome
        current = outcome.value
    return outcome


def value_of(outcome: Outcome) -> Optional[Code]:
    if isinstance(outcome, Converged):
        return outcome.value
    return None


def show_tracker(tracker: Tracker) -> str:
    if isinstance(tracker, TrackerFunction):
        return repr(tracker)
    return show_code(tracker)
