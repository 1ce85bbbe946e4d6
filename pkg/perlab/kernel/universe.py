"""Finite universes of candidate codes.

A universe is written ``codes:N`` (every code up to N) or ``terms:K``
(the codes of every term with at most K application nodes, K at most
``MAX_TERM_SIZE``).
"""

import functools
from dataclasses import dataclass
from typing import List, Tuple

from ..typing_info import Code, UniverseKind
from .terms import cantor

# terms:7 already holds over three million codes
MAX_TERM_SIZE = 6


@dataclass(frozen=True)
class UniverseSpec:
    kind: UniverseKind
    bound: int

    def __post_init__(self) -> None:
        if self.kind not in ("codes", "terms"):
            raise ValueError(f"unknown universe kind {self.kind!r}")
        if self.bound < 0:
            raise ValueError("universe bound must not be negative")
        if self.kind == "terms" and self.bound > MAX_TERM_SIZE:
            raise ValueError(
                f"terms:{self.bound} is too large; at most terms:{MAX_TERM_SIZE}"
            )

    @classmethod
    def parse(cls, text: str) -> "UniverseSpec":
        kind, sep, bound = text.strip().partition(":")
        if not sep or not bound.strip().isdigit():
            raise ValueError(f"{text!r}: expected codes:N or terms:K")
        return cls(kind.strip(), int(bound))  # type: ignore

    def __str__(self) -> str:
        return f"{self.kind}:{self.bound}"


@functools.lru_cache(maxsize=None)
def _terms_of_size(size: int) -> Tuple[Code, ...]:
    """Codes of the terms with exactly ``size`` application nodes."""
    if size == 0:
        return (0, 1, 2)
    codes = []
    for left_size in range(size):
        right_size = size - 1 - left_size
        for a in _terms_of_size(left_size):
            for b in _terms_of_size(right_size):
                codes.append(cantor(a, b) + 3)
    return tuple(codes)


@functools.lru_cache(maxsize=None)
def _enumerate(spec: UniverseSpec) -> Tuple[Code, ...]:
    if spec.kind == "codes":
        return tuple(range(spec.bound + 1))
    codes = set()
    for size in range(spec.bound + 1):
        codes.update(_terms_of_size(size))
    return tuple(sorted(codes))


def enumerate_codes(spec: UniverseSpec) -> List[Code]:
    """Sorted, duplicate-free list of the codes in the universe."""
    return list(_enumerate(spec))
