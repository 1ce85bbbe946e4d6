"""Debug helper

The purpose of this file is to help during development.

Internal exceptions raised by perlab itself are turned into failing
check reports for most users; the full story, with the local variables
of every frame, is printed only when debugging mode is activated.
"""

import sys
from typing import NoReturn, Optional

import stack_data

from .lab_gettext import current_lang

_ = current_lang.translate


# DEBUG is set to True when running with pytest.
# It can also be set to True from __main__ with --debug.

DEBUG = False

_formatter = stack_data.Formatter(show_variables=True, chain=True)


def log(*args: str) -> None:
    if DEBUG:
        for arg in args:
            print(arg)


def log_exception(exc: Optional[BaseException] = None) -> None:
    """Prints an internal error, frames and variables included,
    when debugging mode is on."""
    if not DEBUG or exc is None:
        return
    for line in _formatter.format_exception(exc):
        print(line, end="")


def handle_internal_error(arg: str) -> NoReturn:
    print(_("Fatal error - aborting"), arg, file=sys.stderr)
    print(_("This is a bug in perlab, not in your workbench; please report it."), file=sys.stderr)
    sys.exit(2)
