"""lab_gettext.py

Every message shown to a user of the workbench (witness lines, report
headings, error explanations) is surrounded by a call to a function
named _, as in

    _("This string should be translated.")

Instead of letting gettext install _ in the builtins, we keep track of the
preferred language in a single object and, inside any namespace that
needs a translation, define locally

    _ = current_lang.translate

Catalogs are looked up as ``perlab_<lang>`` inside the ``locales``
directory next to this file; when none exists, the English source
strings are used unchanged.
"""

import gettext
import os
from typing import Optional

from . import debug_helper
from .typing_info import Translator

LOCALEDIR = os.path.normpath(os.path.join(os.path.dirname(__file__), "locales"))


class LangState:
    def __init__(self) -> None:
        self._translate: Translator = lambda text: text
        self.lang = "en"

    def install(self, lang: Optional[str] = None) -> None:
        """Sets the language to be used for translations"""
        if lang is None:
            lang = "en"
        try:
            _lang = gettext.translation(
                f"perlab_{lang}",
                localedir=LOCALEDIR,
                languages=[lang],
                fallback=False,
            )
        except FileNotFoundError:
            # fr_CA -> fr; falls back to the source strings if nothing matches
            lang = lang[:2]
            _lang = gettext.translation(
                f"perlab_{lang}",
                localedir=LOCALEDIR,
                languages=[lang],
                fallback=True,
            )

        self.lang = lang
        self._translate = _lang.gettext

    def translate(self, text: str) -> str:
        translation = self._translate(text)
        if translation == text and self.lang != "en":  # pragma: no cover
            debug_helper.log(f"Potentially untranslated text for {self.lang}:")
            debug_helper.log(text)
        return translation


current_lang = LangState()  # noqa
_ = current_lang.translate


def internal_error(e: Optional[BaseException]) -> str:
    debug_helper.log(f"--> Internal error: {repr(e)}")
    return _("Internal error: {error}").format(error=repr(e))


def undecided_at_fuel(fuel: int) -> str:
    return _("undecided at fuel {fuel}").format(fuel=fuel)
