"""Custom type definitions and shortcuts for annotating ``perlab``."""

from typing import (
    TYPE_CHECKING,
    Callable,
    Hashable,
    List,
    Literal,
    Optional,
    TypedDict,
    Union,
)

if TYPE_CHECKING:
    from .kernel.reduction import TrackerFunction

Code = int

Status = Literal["pass", "fail", "undecided"]

ReportFormat = Literal["text", "json"]

UniverseKind = Literal["codes", "terms"]

# A tracker is either the code of a combinatory term or a host-level
# function standing for one (see functors.psi_repair).
Tracker = Union[Code, "TrackerFunction"]

ClassKey = Hashable


class BudgetInfo(TypedDict):
    universe: str
    fuel: int


class CheckInfo(TypedDict):
    name: str
    status: Status
    witness: Optional[str]
    checked: int
    excluded_by_fuel: int
    ms: Optional[int]


class ReportInfo(TypedDict):
    version: int
    budget: BudgetInfo
    checks: List[CheckInfo]


Translator = Callable[[str], str]
Writer = Callable[[str], None]
