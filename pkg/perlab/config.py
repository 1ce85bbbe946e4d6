"""config.py

Keep tabs of all settings.
"""

import os
import sys
from typing import TYPE_CHECKING, List, Optional, Union

from . import debug_helper
from .lab_gettext import current_lang
from .typing_info import ReportFormat, Writer

if TYPE_CHECKING:
    from .pers import Budget

_ = current_lang.translate

DEFAULT_FUEL = 10_000
DEFAULT_UNIVERSE = "terms:4"
DEFAULT_MAX_ITER = 64
FUEL_ENV_VAR = "PERLAB_FUEL"


def _write_out(text: Optional[str]) -> None:  # pragma: no cover
    """Default writer"""
    if not text:
        return
    sys.stdout.write(text)


def _fuel_from_env() -> int:
    value = os.environ.get(FUEL_ENV_VAR)
    if value is None:
        return DEFAULT_FUEL
    try:
        fuel = int(value)
    except ValueError:
        debug_helper.log(f"Ignoring non-numeric {FUEL_ENV_VAR}={value!r}")
        return DEFAULT_FUEL
    if fuel < 1:
        debug_helper.log(f"Ignoring non-positive {FUEL_ENV_VAR}={value!r}")
        return DEFAULT_FUEL
    return fuel


class _State:
    """Keeping track of various parameters in a single object meant
    to be instantiated only once.

    The budget in force for a workbench form is decided with the
    following precedence: command line flag (``forced_*``), then the
    ``(universe ...)`` and ``(fuel ...)`` declarations of the document,
    then ``PERLAB_FUEL``, then the defaults.
    """

    def __init__(self) -> None:
        self._captured: List[str] = []
        self.write_out: Writer = _write_out
        self.fuel: int = _fuel_from_env()
        self.universe: str = DEFAULT_UNIVERSE
        self.forced_fuel: Optional[int] = None
        self.forced_universe: Optional[str] = None
        self.format: ReportFormat = "text"
        self.seed: int = 0
        self.max_iter: int = DEFAULT_MAX_ITER
        self.memoize: bool = True
        self.timings: bool = False
        self.lang: str = "en"
        current_lang.install(self.lang)

    def set_lang(self, lang: str) -> None:
        current_lang.install(lang)
        self.lang = lang

    def set_fuel(self, fuel: int, forced: bool = False) -> None:
        if fuel < 1:
            raise ValueError(_("Fuel must be a positive number of steps."))
        if forced:
            self.forced_fuel = fuel
        else:
            self.fuel = fuel

    def set_universe(self, spec: str, forced: bool = False) -> None:
        from .kernel.universe import UniverseSpec

        UniverseSpec.parse(spec)  # raises ValueError on bad input
        if forced:
            self.forced_universe = spec
        else:
            self.universe = spec

    def set_format(self, report_format: str) -> None:
        if report_format not in ("text", "json"):
            raise ValueError(
                _("{fmt}: unknown report format; use text or json.").format(
                    fmt=report_format
                )
            )
        self.format = report_format  # type: ignore

    def set_max_iter(self, max_iter: int) -> None:
        if max_iter < 1:
            raise ValueError(_("The iteration bound must be at least 1."))
        self.max_iter = max_iter

    def set_memoize(self, memoize: bool) -> None:
        from .kernel import reduction

        self.memoize = memoize
        reduction.clear_memo()

    def budget(
        self, universe: Optional[str] = None, fuel: Optional[int] = None
    ) -> "Budget":
        """Returns the budget in force, given the (optional) values
        declared in a workbench document."""
        from .pers import make_budget

        spec = self.forced_universe or universe or self.universe
        steps = self.forced_fuel or fuel or self.fuel
        return make_budget(spec, steps)

    def capture(self, txt: str) -> None:
        """Captures the output instead of writing to stdout."""
        self._captured.append(txt)

    def get_captured(self, flush: bool = True) -> str:
        """Returns the result of captured output as a string"""
        result = "".join(self._captured)
        if flush:
            self._captured.clear()
        return result

    def set_redirect(self, redirect: Union[str, Writer, None] = None) -> None:
        """Sets where the output is redirected."""
        if redirect == "capture":
            self.write_out = self.capture
        elif redirect is not None:
            self.write_out = redirect  # type: ignore
        else:
            self.write_out = _write_out

    def reset(self) -> None:
        """Back to the defaults; used by tests and by repeated CLI runs."""
        self.__init__()  # type: ignore


session = _State()
