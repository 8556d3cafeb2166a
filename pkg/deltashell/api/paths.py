from __future__ import annotations

import os
import sys
from typing import Sequence, Union

_executable_dir = os.path.dirname(sys.executable)
_package_base = os.path.dirname(os.path.dirname(__file__))


def _package_directory(directory: Union[str, Sequence[str]]) -> str:
    """
    Returns the path of a directory shipped inside the package, next to the executable
    for a frozen build and inside the source tree otherwise.

    :param directory: The directory or directories to get the full path of
    :return: The full path to the directory
    """
    if isinstance(directory, str):
        directory = (directory,)
    if getattr(sys, "frozen", False):
        return os.path.join(_executable_dir, *directory)
    return os.path.join(_package_base, *directory)


OPERATIONS_DIR = _package_directory("operations")
