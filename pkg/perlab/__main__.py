"""
main.py
---------------

Sets up the various options when perlab is invoked from the
command line. You can find more details by doing::

    python -m perlab -h

"""

import argparse
import dataclasses
import platform
import sys
from pathlib import Path
from typing import List, Optional

from . import TUTORIAL, __version__, debug_helper
from .base_formatters import emit_report
from .config import session
from .errors import PerlabError
from .lab_gettext import current_lang
from .workbench import WorkbenchDoc, exit_code, parse_run, parse_workbench, run_checks

versions = f"perlab version {__version__}. [Python version: {platform.python_version()}]\n"

# Exit codes: 0 every check passed, 1 a check failed or was undecided,
# 2 the workbench could not be read.
USAGE_ERROR = 2

# Flags accepted both before and after the subcommand.
common = argparse.ArgumentParser(add_help=False)
common.add_argument(
    "--fuel",
    type=int,
    default=argparse.SUPPRESS,
    help="""Maximum number of reduction steps of every application.
    Overrides (fuel ...) in the workbench and the PERLAB_FUEL variable.""",
)
common.add_argument(
    "--universe",
    default=argparse.SUPPRESS,
    help="""Candidate codes searched by every check: codes:N (the codes
    0 to N) or terms:K (the codes of terms with at most K nodes,
    K at most 6).""",
)
common.add_argument(
    "--format",
    choices=["text", "json"],
    default=argparse.SUPPRESS,
    help="Report format; json is byte-identical across runs.",
)
common.add_argument(
    "--seed",
    type=int,
    default=argparse.SUPPRESS,
    help="Seed of the sampled checks (pca-laws); exhaustive checks ignore it.",
)
common.add_argument(
    "--max-iter",
    type=int,
    default=argparse.SUPPRESS,
    help="Bound on the iterations of the least fixpoint construction.",
)
common.add_argument(
    "--lang",
    default=argparse.SUPPRESS,
    help="""This sets the language used by perlab.
    Usually this is a two-letter code such as 'fr' for French.""",
)
common.add_argument(
    "--timings",
    action="store_true",
    default=argparse.SUPPRESS,
    help="Include the wall time of every check in the report.",
)
common.add_argument(
    "--debug", action="store_true", default=argparse.SUPPRESS, help="For developer use."
)

parser = argparse.ArgumentParser(
    prog="perlab",
    parents=[common],
    formatter_class=argparse.RawDescriptionHelpFormatter,
    description=(
        """perlab checks constructions on partial equivalence relations
    over a fuel-bounded combinatory algebra.

    {versions}""".format(
            versions=versions
        )
    ),
)
parser.add_argument("--version", help="Only displays the current version.", action="store_true")

subparsers = parser.add_subparsers(dest="command")

check_parser = subparsers.add_parser(
    "check", parents=[common], help="Runs every assert and run form of a workbench."
)
check_parser.add_argument("source", help="Path to the workbench file.")

fixpoint_parser = subparsers.add_parser(
    "fixpoint", parents=[common], help="Least fixpoint of a declared functor."
)
fixpoint_parser.add_argument("source", help="Path to the workbench file.")
fixpoint_parser.add_argument("--functor", required=True)
fixpoint_parser.add_argument(
    "--trace", action="store_true", help="Show the size of every iterate."
)

initial_parser = subparsers.add_parser(
    "initial-algebra",
    parents=[common],
    help="The limit algebra of a family of algebras, and its initiality.",
)
initial_parser.add_argument("source", help="Path to the workbench file.")
initial_parser.add_argument("--functor", required=True)
initial_parser.add_argument("--family", required=True)
initial_parser.add_argument(
    "--din-experiment",
    action="store_true",
    help="Also compare the limit carrier with the plain intersection (informational).",
)

monotonize_parser = subparsers.add_parser(
    "monotonize", parents=[common], help="Monotonicity of F and of its Yoneda transform."
)
monotonize_parser.add_argument("source", help="Path to the workbench file.")
monotonize_parser.add_argument("--functor", required=True)
monotonize_parser.add_argument("--family", required=True)

subparsers.add_parser("tutorial", parents=[common], help="Prints the path of the tutorial workbench.")


def apply_settings(args: argparse.Namespace) -> None:
    """Flags go into the session; ``forced`` values win over the document."""
    if getattr(args, "debug", False):  # pragma: no cover
        debug_helper.DEBUG = True
    if hasattr(args, "lang"):
        session.set_lang(args.lang)
    if hasattr(args, "fuel"):
        session.set_fuel(args.fuel, forced=True)
    if hasattr(args, "universe"):
        session.set_universe(args.universe, forced=True)
    if hasattr(args, "format"):
        session.set_format(args.format)
    if hasattr(args, "seed"):
        session.seed = args.seed
    if hasattr(args, "max_iter"):
        session.set_max_iter(args.max_iter)
    if getattr(args, "timings", False):
        session.timings = True


def single_run(doc: WorkbenchDoc, text: str) -> WorkbenchDoc:
    """The document with its checks replaced by one run form."""
    return dataclasses.replace(doc, checks=[parse_run(doc, text)])


def run_form(args: argparse.Namespace) -> Optional[str]:
    if args.command == "fixpoint":
        return f"fixpoint {args.functor}"
    if args.command == "initial-algebra":
        suffix = " din-experiment" if args.din_experiment else ""
        return f"initial-algebra {args.functor} {args.family}{suffix}"
    if args.command == "monotonize":
        return f"monotonize {args.functor} {args.family}"
    return None


def main(argv: Optional[List[str]] = None) -> int:
    _ = current_lang.translate
    args = parser.parse_args(argv)
    if args.version:  # pragma: no cover
        print(f"\nperlab version {__version__}")
        return 0
    try:
        apply_settings(args)
    except ValueError as error:
        print(error, file=sys.stderr)
        return USAGE_ERROR

    if args.command == "tutorial":
        print(TUTORIAL)
        return 0
    if args.command is None:
        parser.print_help()
        return USAGE_ERROR

    filename = Path(args.source)
    if not filename.exists():
        print(
            _("The file {filename} does not exist.").format(filename=args.source),
            file=sys.stderr,
        )
        return USAGE_ERROR
    try:
        doc = parse_workbench(filename.read_text(encoding="utf8"))
        form = run_form(args)
        if form is not None:
            doc = single_run(doc, form)
    except PerlabError as error:
        print(f"{filename}: {error}", file=sys.stderr)
        return USAGE_ERROR

    try:
        reports = run_checks(doc, trace=getattr(args, "trace", False))
        emit_report(reports, budget=session.budget(doc.universe, doc.fuel))
    except Exception as error:  # noqa
        debug_helper.log_exception(error)
        debug_helper.handle_internal_error(repr(error))
    return exit_code(reports)


if __name__ == "__main__":
    sys.exit(main())
