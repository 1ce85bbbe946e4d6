"""
The functions of this module are the public API of perlab: read a
workbench document, run the checks it declares, and write a report.

Everything else (Pers, morphisms, functors and the constructions built
from them) is used by importing the corresponding module, for example::

    from perlab.pers import DeclaredPer, exponential
    from perlab.functors import Id, from_expr

perlab is compatible with Python 3.8 or newer.
"""

import sys

valid_version = sys.version_info >= (3, 8)

if not valid_version:  # pragma: no cover
    print("Python 3.8 or newer is required.")
    sys.exit()

__version__ = "0.3.1"

# ===========================================
# debug_helper has to come first: lab_gettext imports it back.

from pathlib import Path  # noqa: E402
from typing import List, Optional, Union  # noqa: E402

from . import debug_helper  # noqa: E402, F401
from .base_formatters import emit_report  # noqa: E402
from .config import session  # noqa: E402
from .pers import Budget  # noqa: E402
from .verdicts import CheckReport  # noqa: E402
from .workbench import parse_workbench, run_checks  # noqa: E402

TUTORIAL = Path(__file__).parent / "tutorial.wb"


def run_file(
    filename: Union[str, Path], report_format: Optional[str] = None
) -> List[CheckReport]:
    """Parses and runs a workbench file, writes its report and returns
    the reports, so that the caller can decide on an exit code."""
    text = Path(filename).read_text(encoding="utf8")
    doc = parse_workbench(text)
    reports = run_checks(doc)
    emit_report(reports, report_format, session.budget(doc.universe, doc.fuel))
    return reports


def set_fuel(fuel: int) -> None:
    """Sets the default number of reduction steps of every application."""
    session.set_fuel(fuel)


def set_universe(spec: str) -> None:
    """Sets the default universe, as ``codes:N`` or ``terms:K``."""
    session.set_universe(spec)


def get_budget() -> Budget:
    return session.budget()


def set_lang(lang: str) -> None:
    """Language of the reports, as a two-letter code such as ``fr``."""
    session.set_lang(lang)


__all__ = [
    "TUTORIAL",
    "__version__",
    "emit_report",
    "get_budget",
    "parse_workbench",
    "run_checks",
    "run_file",
    "set_fuel",
    "set_lang",
    "set_universe",
]
