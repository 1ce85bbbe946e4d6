"""Partial equivalence relations on codes.

Two kinds of Per live here:

* ``DeclaredPer``: a finite carrier and its partition into classes,
  written down by hand (or computed from another Per by ``restrict``).
* ``DerivedPer``: the result of a construction (exponential, product,
  intersection, and the limits built in ``algebras`` and ``yoneda``).
  A derived Per keeps the condition that defines it as a *class key*
  function, so it can decide membership and relatedness for any code,
  and lazily enumerates its carrier over the budget universe.

Both answer ``class_key(code)``: two codes are related iff they have the
same key, ``None`` means "not in the domain" and ``UNDECIDED`` means the
fuel ran out before this could be settled.
"""

import functools
import itertools
from typing import (
    Dict,
    Hashable,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from . import debug_helper
from .errors import BudgetMismatchError, PerError
from .kernel.combinators import first, pair_of, second
from .kernel.reduction import Fuel, OutOfFuel, run_tracker
from .kernel.terms import show_code
from .kernel.universe import UniverseSpec, enumerate_codes
from .lab_gettext import current_lang
from .typing_info import BudgetInfo, ClassKey, Code
from .verdicts import Tally, Verdict

_ = current_lang.translate

MAX_SHOWN_CODES = 24


class _Undecided:
    __slots__ = ()

    def __repr__(self) -> str:
        return "UNDECIDED"


UNDECIDED = _Undecided()
_MISSING = object()

Key = Union[ClassKey, None, _Undecided]


def is_member(key: Key) -> bool:
    return key is not None and key is not UNDECIDED


class Budget:
    """A universe of candidate codes together with the fuel of every
    application made while searching it."""

    __slots__ = ("spec", "universe", "fuel")

    def __init__(self, spec: UniverseSpec, fuel: Fuel) -> None:
        self.spec = spec
        self.universe: Tuple[Code, ...] = tuple(enumerate_codes(spec))
        self.fuel = fuel

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Budget):
            return NotImplemented
        return self.spec == other.spec and self.fuel == other.fuel

    def __hash__(self) -> int:
        return hash((self.spec, self.fuel))

    def __str__(self) -> str:
        return f"{self.spec}, fuel {self.fuel.max_steps}"

    def __repr__(self) -> str:
        return f"Budget({self})"

    def info(self) -> BudgetInfo:
        return {"universe": str(self.spec), "fuel": self.fuel.max_steps}


@functools.lru_cache(maxsize=None)
def _make_budget(spec: UniverseSpec, steps: int) -> Budget:
    return Budget(spec, Fuel(steps))


def make_budget(spec: Union[str, UniverseSpec], steps: int) -> Budget:
    if isinstance(spec, str):
        spec = UniverseSpec.parse(spec)
    return _make_budget(spec, steps)


def show_blocks(blocks: Sequence[Sequence[Code]]) -> str:
    if sum(len(block) for block in blocks) > MAX_SHOWN_CODES:
        size = sum(len(block) for block in blocks)
        return f"<{len(blocks)} classes on {size} codes>"
    return "{" + ",".join("{" + ",".join(map(show_code, b)) + "}" for b in blocks) + "}"


class Per:
    """Base class. Pers compare (and hash) by identity; use
    ``same_relation`` to compare the relations they stand for."""

    def __init__(self, name: Optional[str] = None, budget: Optional[Budget] = None):
        self.name = name
        self.budget = budget

    def blocks(self) -> List[Tuple[Code, ...]]:  # pragma: no cover
        raise NotImplementedError

    def class_key(self, code: Code) -> Key:  # pragma: no cover
        raise NotImplementedError

    @property
    def excluded_by_fuel(self) -> Tuple[Code, ...]:
        return ()

    def carrier(self) -> List[Code]:
        return sorted(itertools.chain.from_iterable(self.blocks()))

    def representatives(self) -> List[Code]:
        return [block[0] for block in self.blocks()]

    def is_empty(self) -> bool:
        return not self.blocks()

    def __contains__(self, code: Code) -> bool:
        return is_member(self.class_key(code))

    def related(self, a: Code, b: Code) -> bool:
        key = self.class_key(a)
        return is_member(key) and key == self.class_key(b)

    def __str__(self) -> str:
        if self.name is not None:
            return self.name
        return show_blocks(self.blocks())

    def __repr__(self) -> str:
        return f"<Per {self}>"


class DeclaredPer(Per):
    def __init__(
        self,
        blocks: Iterable[Iterable[Code]],
        name: Optional[str] = None,
        carrier: Optional[Iterable[Code]] = None,
    ) -> None:
        super().__init__(name)
        self._index: Dict[Code, Code] = {}
        normal: List[Tuple[Code, ...]] = []
        for raw_block in blocks:
            block = tuple(sorted(set(raw_block)))
            if not block:
                raise PerError(_("{name}: a class cannot be empty.").format(name=self))
            for code in block:
                if code < 0:
                    raise PerError(
                        _("{code} is not a natural number.").format(code=code)
                    )
                if code in self._index:
                    raise PerError(
                        _("{code} appears in two classes of {name}.").format(
                            code=code, name=name or "a per"
                        )
                    )
                self._index[code] = block[0]
            normal.append(block)
        normal.sort()
        self._blocks = normal
        if carrier is not None:
            declared = set(carrier)
            if declared != set(self._index):
                odd = sorted(declared.symmetric_difference(self._index))
                raise PerError(
                    _("The classes of {name} do not partition its carrier: {codes}.").format(
                        name=name or "a per", codes=odd
                    )
                )

    def blocks(self) -> List[Tuple[Code, ...]]:
        return self._blocks

    def class_key(self, code: Code) -> Key:
        return self._index.get(code)


class DerivedPer(Per):
    """A Per given by its class key function.

    Subclasses implement ``compute_key`` and, when the candidates are not
    the whole budget universe, ``candidates``.
    """

    def __init__(self, name: Optional[str], budget: Optional[Budget]) -> None:
        super().__init__(name, budget)
        self._keys: Dict[Code, Key] = {}
        self._blocks: Optional[List[Tuple[Code, ...]]] = None
        self._excluded: Tuple[Code, ...] = ()

    def compute_key(self, code: Code) -> Key:  # pragma: no cover
        raise NotImplementedError

    def candidates(self) -> Iterable[Code]:
        assert self.budget is not None
        return self.budget.universe

    @property
    def fuel(self) -> Fuel:
        assert self.budget is not None
        return self.budget.fuel

    def class_key(self, code: Code) -> Key:
        key = self._keys.get(code, _MISSING)
        if key is _MISSING:
            key = self.compute_key(code)
            self._keys[code] = key
        return key  # type: ignore

    def blocks(self) -> List[Tuple[Code, ...]]:
        if self._blocks is None:
            self._enumerate()
        assert self._blocks is not None
        return self._blocks

    @property
    def excluded_by_fuel(self) -> Tuple[Code, ...]:
        self.blocks()
        return self._excluded

    def _enumerate(self) -> None:
        groups: Dict[Hashable, List[Code]] = {}
        excluded: List[Code] = []
        for code in self.candidates():
            key = self.class_key(code)
            if key is UNDECIDED:
                excluded.append(code)
            elif key is not None:
                groups.setdefault(key, []).append(code)
        self._set_blocks(groups.values(), excluded)

    def _set_blocks(
        self, blocks: Iterable[List[Code]], excluded: Iterable[Code] = ()
    ) -> None:
        self._blocks = sorted(tuple(sorted(set(block))) for block in blocks)
        self._excluded = tuple(sorted(set(excluded)))
        if self._excluded:
            debug_helper.log(
                f"{self}: {len(self._excluded)} candidates undecided at {self.budget}"
            )


class ExponentialPer(DerivedPer):
    """``[R -> S]``: the codes tracking a function from ``R`` to ``S``.

    The key of a tracker is the tuple of the target keys of its images,
    one per class of the source.
    """

    def __init__(self, source: Per, target: Per, budget: Budget) -> None:
        super().__init__(None, budget)
        self.source = source
        self.target = target

    def __str__(self) -> str:
        return f"[{self.source} -> {self.target}]"

    def compute_key(self, code: Code) -> Key:
        keys = []
        undecided = False
        for block in self.source.blocks():
            block_key: Key = None
            for a in block:
                outcome = run_tracker(code, a, self.fuel)
                if isinstance(outcome, OutOfFuel):
                    undecided = True
                    continue
                key = self.target.class_key(outcome.value)
                if key is None:
                    return None
                if key is UNDECIDED:
                    undecided = True
                elif block_key is None:
                    block_key = key
                elif key != block_key:
                    return None
            keys.append(block_key)
        if undecided:
            return UNDECIDED
        return tuple(keys)


class ProductPer(DerivedPer):
    """``R x S``, carried by the pairs ``PAIR a x``.

    A code is a member only when it is the pair of its own projections.
    """

    def __init__(self, left: Per, right: Per, budget: Budget) -> None:
        super().__init__(None, budget)
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"({self.left} x {self.right})"

    def compute_key(self, code: Code) -> Key:
        a = first(code, self.fuel)
        x = second(code, self.fuel)
        if a is None or x is None:
            return UNDECIDED
        left_key = self.left.class_key(a)
        right_key = self.right.class_key(x)
        if left_key is None or right_key is None:
            return None
        pair = pair_of(a, x, self.fuel)
        if pair is None:
            return UNDECIDED
        if pair != code:
            return None
        if left_key is UNDECIDED or right_key is UNDECIDED:
            return UNDECIDED
        return (left_key, right_key)

    def _enumerate(self) -> None:
        groups: Dict[Hashable, List[Code]] = {}
        for a in self.left.carrier():
            for x in self.right.carrier():
                pair = pair_of(a, x, self.fuel)
                if pair is None:
                    raise PerError(
                        _("Pairing {a} with {x} ran out of fuel ({budget}).").format(
                            a=show_code(a), x=show_code(x), budget=self.budget
                        )
                    )
                key = self.class_key(pair)
                if key != (self.left.class_key(a), self.right.class_key(x)):
                    raise PerError(
                        _(
                            "The pair of {a} and {x} (code {pair}) does not "
                            "project back onto its components."
                        ).format(a=show_code(a), x=show_code(x), pair=show_code(pair))
                    )
                groups.setdefault(key, []).append(pair)
        self._set_blocks(groups.values())


class IntersectionPer(DerivedPer):
    def __init__(self, members: Sequence[Per], budget: Optional[Budget]) -> None:
        super().__init__(None, budget)
        self.members = list(members)

    def __str__(self) -> str:
        if self.name is not None:
            return self.name
        return "meet(" + ", ".join(str(member) for member in self.members) + ")"

    def candidates(self) -> Iterable[Code]:
        return self.members[0].carrier()

    def compute_key(self, code: Code) -> Key:
        keys = [member.class_key(code) for member in self.members]
        if any(key is None for key in keys):
            return None
        if any(key is UNDECIDED for key in keys):
            return UNDECIDED
        return tuple(keys)


def common_budget(*pers: Per) -> Optional[Budget]:
    """The budget shared by the derived Pers among ``pers``, if any."""
    found: Optional[Budget] = None
    for per in pers:
        if per.budget is None:
            continue
        if found is None:
            found = per.budget
        elif per.budget != found:
            raise BudgetMismatchError(
                _("{first} and {second} were built under different budgets.").format(
                    first=found, second=per.budget
                )
            )
    return found


def check_budget(budget: Budget, *pers: Per) -> None:
    other = common_budget(*pers)
    if other is not None and other != budget:
        raise BudgetMismatchError(
            _("Expected objects built under {expected}, not {actual}.").format(
                expected=budget, actual=other
            )
        )


def empty_per() -> DeclaredPer:
    return DeclaredPer([])


def related(per: Per, a: Code, b: Code) -> bool:
    return per.related(a, b)


def check_includes(smaller: Per, larger: Per) -> Verdict:
    """Relation inclusion, with a witness pair when it fails.

    Checking every code of a class against the least one is enough, the
    relations being transitive.
    """
    common_budget(smaller, larger)
    tally = Tally()
    for block in smaller.blocks():
        representative = block[0]
        key = larger.class_key(representative)
        if key is UNDECIDED:
            tally.undecided(_("membership of {code}").format(code=show_code(representative)))
            continue
        if key is None:
            tally.fail(
                _("{code} is in {small} but not in {large}").format(
                    code=show_code(representative), small=smaller, large=larger
                )
            )
            break
        for code in block[1:]:
            other = larger.class_key(code)
            if other is UNDECIDED:
                tally.undecided(_("membership of {code}").format(code=show_code(code)))
            elif other != key:
                tally.fail(
                    _("({a}, {b}) are related in {small} but not in {large}").format(
                        a=show_code(representative), b=show_code(code), small=smaller, large=larger
                    )
                )
                break
        if tally.failed:
            break
        tally.ok()
    return tally.verdict()


def includes(smaller: Per, larger: Per) -> bool:
    return check_includes(smaller, larger).ok


def same_relation(first_per: Per, second_per: Per) -> bool:
    return includes(first_per, second_per) and includes(second_per, first_per)


def intersect(family: Sequence[Per]) -> Per:
    if not family:
        raise PerError(_("Cannot intersect an empty family of pers."))
    if len(family) == 1:
        return family[0]
    return IntersectionPer(family, common_budget(*family))


def product(left: Per, right: Per, budget: Budget) -> Per:
    check_budget(budget, left, right)
    return ProductPer(left, right, budget)


@functools.lru_cache(maxsize=4096)
def exponential(source: Per, target: Per, budget: Budget) -> Per:
    """``[source -> target]`` relative to ``budget``.

    Candidates that run out of fuel are left out of the carrier and
    listed in ``excluded_by_fuel``.
    """
    check_budget(budget, source, target)
    return ExponentialPer(source, target, budget)


def quotient(per: Per) -> List[List[Code]]:
    return [list(block) for block in per.blocks()]


def restrict(per: Per, codes: Iterable[Code], name: Optional[str] = None) -> DeclaredPer:
    """The sub-Per of ``per`` on the codes of ``codes`` that are in its domain."""
    groups: Dict[Hashable, List[Code]] = {}
    for code in sorted(set(codes)):
        key = per.class_key(code)
        if is_member(key):
            groups.setdefault(key, []).append(code)  # type: ignore
    return DeclaredPer(groups.values(), name=name)


def standard_lattice() -> List[Per]:
    """The empty Per followed by six Pers over the codes 0 to 3."""
    return [
        empty_per(),
        DeclaredPer([[0]]),
        DeclaredPer([[0], [1]]),
        DeclaredPer([[0], [2]]),
        DeclaredPer([[0], [1], [2]]),
        DeclaredPer([[0, 1], [2]]),
        DeclaredPer([[0, 1, 2, 3]]),
    ]


def set_partitions(items: Sequence[Code]) -> Iterator[List[List[Code]]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[head], *partition]
        for index, block in enumerate(partition):
            yield [*partition[:index], [head, *block], *partition[index + 1 :]]


def all_pers_on(codes: Iterable[Code]) -> List[Per]:
    """Every Per whose carrier is a subset of ``codes``."""
    pool = sorted(set(codes))
    found: List[Per] = []
    for size in range(len(pool) + 1):
        for subset in itertools.combinations(pool, size):
            for partition in set_partitions(subset):
                found.append(DeclaredPer(partition))
    return found
