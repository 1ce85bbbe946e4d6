"""The combinator laws, checked by evaluation.

Each law compares the normal forms of its two sides, and only counts
where both sides converge. ``I x = x`` is checked for every code up to
the limit and the laws with two arguments for every pair of such codes;
the laws with three arguments on a seeded sample of codes up to the
limit, whose size is reported in the details.
"""

import itertools
import random
from typing import Callable, List, Tuple

from ..lab_gettext import current_lang
from ..verdicts import Tally, Verdict
from .combinators import B_TERM, FST_TERM, PAIR_TERM, SND_TERM
from .reduction import Converged, Fuel, normalize
from .terms import App, I, K, S, Term, decode, show_code

_ = current_lang.translate

Law = Tuple[str, int, Callable[..., Tuple[Term, Term]]]

LAWS: List[Law] = [
    ("K x y = x", 2, lambda x, y: (K(x, y), x)),
    ("S f g x = f x (g x)", 3, lambda f, g, x: (S(f, g, x), f(x, App(g, x)))),
    ("B f g x = f (g x)", 3, lambda f, g, x: (B_TERM(f, g, x), f(App(g, x)))),
    ("FST (PAIR a b) = a", 2, lambda a, b: (FST_TERM(PAIR_TERM(a, b)), a)),
    ("SND (PAIR a b) = b", 2, lambda a, b: (SND_TERM(PAIR_TERM(a, b)), b)),
]


def _compare(name: str, sides: Tuple[Term, Term], args: Tuple[int, ...], fuel: Fuel, tally: Tally) -> None:
    left, right = (normalize(side, fuel) for side in sides)
    if not (isinstance(left, Converged) and isinstance(right, Converged)):
        return
    if left.value == right.value:
        tally.ok()
    else:
        tally.fail(
            _("{law} fails for {args}: {left} against {right}").format(
                law=name,
                args=", ".join(map(show_code, args)),
                left=show_code(left.value),
                right=show_code(right.value),
            )
        )


def check_pca_laws(limit: int, fuel: Fuel, seed: int = 0, samples: int = 200) -> Verdict:
    tally = Tally()
    codes = range(limit + 1)
    for code in codes:
        _compare("I x = x", (I(decode(code)), decode(code)), (code,), fuel, tally)
        if tally.failed:
            return tally.verdict()
    for name, arity, law in LAWS:
        if arity != 2:
            continue
        for args in itertools.product(codes, repeat=2):
            _compare(name, law(*(decode(arg) for arg in args)), args, fuel, tally)
            if tally.failed:
                return tally.verdict()
    rng = random.Random(seed)
    sampled = [(name, law) for name, arity, law in LAWS if arity == 3]
    for name, law in sampled:
        for _sample in range(samples):
            args = tuple(rng.randint(0, limit) for _position in range(3))
            _compare(name, law(*(decode(arg) for arg in args)), args, fuel, tally)
            if tally.failed:
                return tally.verdict()
    return tally.verdict().with_details(
        _("{count} seeded samples (seed {seed}) for each of: {laws}").format(
            count=samples, seed=seed, laws="; ".join(name for name, _law in sampled)
        )
    )
