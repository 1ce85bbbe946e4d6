"""Three-valued verdicts and the reports built from them.

A check is never just True or False: when the fuel runs out before a
question is settled, the answer is "undecided", and it is kept apart
from "fail" all the way up to the exit code of the command line.
"""

import time
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Iterable, List, Optional, Tuple

from .lab_gettext import current_lang
from .typing_info import CheckInfo, Status

if TYPE_CHECKING:
    from .pers import Budget

_ = current_lang.translate


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: Optional[str] = None
    checked: int = 0
    excluded_by_fuel: int = 0
    details: Tuple[str, ...] = ()
    error: bool = False

    def __post_init__(self) -> None:
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @classmethod
    def passed(cls, checked: int = 0, details: Tuple[str, ...] = ()) -> "Verdict":
        return cls("pass", None, checked, 0, details)

    @classmethod
    def failed(
        cls, witness: str, checked: int = 0, excluded_by_fuel: int = 0
    ) -> "Verdict":
        return cls("fail", witness, checked, excluded_by_fuel)

    @classmethod
    def undecided(
        cls, witness: str, checked: int = 0, excluded_by_fuel: int = 1
    ) -> "Verdict":
        return cls("undecided", witness, checked, excluded_by_fuel)

    @classmethod
    def errored(cls, witness: str) -> "Verdict":
        """A check that raised instead of answering."""
        return cls("fail", witness, error=True)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def with_details(self, *details: str) -> "Verdict":
        return replace(self, details=self.details + tuple(details))

    def negated(self, description: str) -> "Verdict":
        """Verdict of ``(not ...)``: pass and fail swap, undecided stays.

        A check that raised fails under ``(not ...)`` too.
        """
        if self.error:
            return self
        if self.status == "pass":
            return Verdict.failed(
                _("{what} holds").format(what=description), self.checked
            )
        if self.status == "fail":
            return Verdict.passed(self.checked, self.details)
        return self


def merge(verdicts: Iterable[Verdict]) -> Verdict:
    """A fail anywhere wins over an undecided anywhere, which wins over pass.

    Counts add up; the witness is the first one of the winning status.
    """
    checked = 0
    excluded = 0
    details: List[str] = []
    fail_witness: Optional[str] = None
    undecided_witness: Optional[str] = None
    for verdict in verdicts:
        checked += verdict.checked
        excluded += verdict.excluded_by_fuel
        details.extend(verdict.details)
        if verdict.status == "fail" and fail_witness is None:
            fail_witness = verdict.witness
        elif verdict.status == "undecided" and undecided_witness is None:
            undecided_witness = verdict.witness
    if fail_witness is not None:
        return Verdict("fail", fail_witness, checked, excluded, tuple(details))
    if undecided_witness is not None:
        return Verdict("undecided", undecided_witness, checked, excluded, tuple(details))
    return Verdict("pass", None, checked, excluded, tuple(details))


class Tally:
    """Accumulates the outcome of a sweep over many cases.

    Sweeps stop at the first failure (``tally.failed``); undecided cases
    are counted and the first one is remembered.
    """

    def __init__(self) -> None:
        self.checked = 0
        self.excluded = 0
        self.fail_witness: Optional[str] = None
        self.undecided_witness: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.fail_witness is not None

    def ok(self) -> None:
        self.checked += 1

    def fail(self, witness: str) -> None:
        self.checked += 1
        if self.fail_witness is None:
            self.fail_witness = witness

    def undecided(self, witness: str) -> None:
        self.excluded += 1
        if self.undecided_witness is None:
            self.undecided_witness = witness

    def add(self, verdict: Verdict) -> None:
        self.checked += verdict.checked
        self.excluded += verdict.excluded_by_fuel
        if verdict.status == "fail" and self.fail_witness is None:
            self.fail_witness = verdict.witness
        elif verdict.status == "undecided" and self.undecided_witness is None:
            self.undecided_witness = verdict.witness

    def verdict(self) -> Verdict:
        if self.fail_witness is not None:
            return Verdict("fail", self.fail_witness, self.checked, self.excluded)
        if self.undecided_witness is not None:
            return Verdict(
                "undecided", self.undecided_witness, self.checked, self.excluded
            )
        return Verdict("pass", None, self.checked, self.excluded)


@dataclass(frozen=True)
class CheckReport:
    name: str
    verdict: Verdict
    budget: "Budget"
    ms: Optional[int] = field(default=None, compare=False)

    @property
    def status(self) -> Status:
        return self.verdict.status

    def as_info(self, timings: bool = False) -> CheckInfo:
        return {
            "name": self.name,
            "status": self.verdict.status,
            "witness": self.verdict.witness,
            "checked": self.verdict.checked,
            "excluded_by_fuel": self.verdict.excluded_by_fuel,
            "ms": self.ms if timings else None,
        }


class Stopwatch:
    def __init__(self) -> None:
        self._start = time.perf_counter()

    def elapsed_ms(self) -> int:
        return int((time.perf_counter() - self._start) * 1000)
