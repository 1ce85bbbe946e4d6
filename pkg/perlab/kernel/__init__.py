"""The combinatory algebra the workbench computes in."""

from .abstraction import abstract, lam
from .combinators import comp, pair_of, stdlib
from .reduction import (
    OUT_OF_FUEL,
    Converged,
    Fuel,
    OutOfFuel,
    TrackerFunction,
    apply,
    normalize,
    run_tracker,
)
from .terms import App, I, K, S, Var, decode, encode, parse_term, show_code, show_term
from .universe import UniverseSpec, enumerate_codes

__all__ = [
    "App",
    "Converged",
    "Fuel",
    "I",
    "K",
    "OUT_OF_FUEL",
    "OutOfFuel",
    "S",
    "TrackerFunction",
    "UniverseSpec",
    "Var",
    "abstract",
    "apply",
    "comp",
    "decode",
    "encode",
    "enumerate_codes",
    "lam",
    "normalize",
    "pair_of",
    "parse_term",
    "run_tracker",
    "show_code",
    "show_term",
    "stdlib",
]
