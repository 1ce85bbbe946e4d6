"""The named combinators every construction of the workbench is built from."""

import functools
from dataclasses import dataclass
from typing import Dict, Optional

from ..typing_info import Code
from .abstraction import lam
from .reduction import FuelLike, run_chain, value_of
from .terms import I, K, S, Term, Var, decode, encode

x, y, z, p = Var("x"), Var("y"), Var("z"), Var("p")

B_TERM: Term = S(K(S), K)
PAIR_TERM: Term = lam("xyz", z(x, y))
FST_TERM: Term = lam("p", p(K))
SND_TERM: Term = lam("p", p(K(I)))

B: Code = encode(B_TERM)
PAIR: Code = encode(PAIR_TERM)
FST: Code = encode(FST_TERM)
SND: Code = encode(SND_TERM)
IDENTITY: Code = I.code


@dataclass(frozen=True)
class Stdlib:
    I: Code
    K: Code
    S: Code
    B: Code
    PAIR: Code
    FST: Code
    SND: Code

    @staticmethod
    def COMP(n: Code, m: Code) -> Code:  # noqa: N802
        return comp(n, m)

    def as_dict(self) -> Dict[str, Code]:
        return {
            "I": self.I,
            "K": self.K,
            "S": self.S,
            "B": self.B,
            "PAIR": self.PAIR,
            "FST": self.FST,
            "SND": self.SND,
        }


@functools.lru_cache(maxsize=None)
def stdlib() -> Stdlib:
    return Stdlib(I=I.code, K=K.code, S=S.code, B=B, PAIR=PAIR, FST=FST, SND=SND)


def comp_term(n: Term, m: Term) -> Term:
    return B_TERM(n, m)


def comp(n: Code, m: Code) -> Code:
    """Code of ``B n m``, which behaves as ``n ∘ m``."""
    return encode(comp_term(decode(n), decode(m)))


def pair_of(a: Code, b: Code, fuel: FuelLike) -> Optional[Code]:
    """``PAIR a b``, or None when it does not converge within ``fuel``."""
    return value_of(run_chain(fuel, PAIR, a, b))


def first(code: Code, fuel: FuelLike) -> Optional[Code]:
    return value_of(run_chain(fuel, FST, code))


def second(code: Code, fuel: FuelLike) -> Optional[Code]:
    return value_of(run_chain(fuel, SND, code))
