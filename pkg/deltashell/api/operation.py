from __future__ import annotations

from abc import abstractmethod
import glob
from importlib import import_module, reload
import sys
from os.path import basename, join
from typing import Dict, Type

from . import paths

_imported_operations = False
OPERATIONS: Dict[str, Type["Operation"]] = {}


class Operation:
    """
    One analysis that can be run on a problem file. Subclasses read what they need from
    the problem and fill a :class:`deltashell.api.report.Report`.
    """

    def __init__(self, problem: "ProblemFile"):
        self.problem = problem

    @abstractmethod
    def run_operation(self) -> "Report":
        pass


def register(operation_name):
    """
    Registers the decorated class as an Operation with the supplied operation name

    :param operation_name: The identifying name for the Operation
    """

    def wrapper(clazz):
        if operation_name not in OPERATIONS:
            OPERATIONS[operation_name] = clazz

        return clazz

    return wrapper


def get_operation(operation_name: str) -> Type[Operation]:
    if not _imported_operations:
        _import_operations()
    try:
        return OPERATIONS[operation_name]
    except KeyError:
        raise KeyError(f"No operation is registered as '{operation_name}'") from None


def reload_operations():
    """
    Reloads all Operations found in the directory pointed at by :py:data:`api.paths.OPERATIONS_DIR`
    """
    global OPERATIONS
    OPERATIONS = {}
    _import_operations()


def _import_operations():
    global _imported_operations
    for f in sorted(glob.glob(join(paths.OPERATIONS_DIR, "*.py"))):
        name = basename(f)[:-3]
        if name != "__init__":
            module = f"deltashell.operations.{name}"
            if module in sys.modules:
                reload(sys.modules[module])
            else:
                import_module(module)
    _imported_operations = True
