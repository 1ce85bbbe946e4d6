"""Reading workbench documents and running the checks they ask for."""

from .checks import exit_code, registry, run_checks
from .parser import WorkbenchDoc, parse_run, parse_workbench

__all__ = ["WorkbenchDoc", "exit_code", "parse_run", "parse_workbench", "registry", "run_checks"]
