from __future__ import annotations

import json
import os
from typing import Tuple

VERSION_STAGES = ("DEV", "ALPHA", "BETA", "RC", "RELEASE")

VERSION_PY_TEMPLATE = '''"""Generated by tools/generate_version.py from version.json. Do not edit."""

VERSION_NUMBER = ({major}, {minor}, {patch})
VERSION_INT = {number}
VERSION_STAGE = "{stage}"
VERSION_STRING = f"{{'.'.join(str(n) for n in VERSION_NUMBER)}}-{{VERSION_STAGE}}"

if __debug__:
    VERSION_STRING += "-source"
'''

VersionInfo = Tuple[Tuple[int, int, int], int, str]


def read_version_json(path: str = "version.json") -> VersionInfo:
    """
    Read the version triple, build number and stage from a version json file.

    Missing files give the development defaults.

    :param path: Path to the json file
    :return: ((major, minor, patch), version_int, stage)
    """
    if not os.path.exists(path):
        return (0, 0, 0), -1, "DEV"
    with open(path) as fp:
        data = json.load(fp)
    stage = data.get("version_stage", "DEV")
    if stage not in VERSION_STAGES:
        raise ValueError(f"Unknown version stage {stage!r} in {path}")
    major, minor, patch = data["version_number"]
    return (int(major), int(minor), int(patch)), int(data["version_int"]), stage


def write_version_py(version: VersionInfo, save_path: str):
    (major, minor, patch), number, stage = version
    with open(save_path, "w") as fp:
        fp.write(
            VERSION_PY_TEMPLATE.format(
                major=major, minor=minor, patch=patch, number=number, stage=stage
            )
        )


if __name__ == "__main__":
    from argparse import ArgumentParser

    parser = ArgumentParser(
        description="Generate the version.py module of a deltashell build"
    )
    parser.add_argument(
        "-f",
        "--input",
        default="version.json",
        help="The JSON to load version information from",
    )
    parser.add_argument(
        "-o",
        "--output",
        default=os.path.join("deltashell", "version.py"),
        help="The file to write version information to",
    )
    parser.add_argument(
        "-s",
        "--stage",
        choices=VERSION_STAGES,
        help="Override the version stage found in the input file",
    )
    args = parser.parse_args()

    version_number, version_int, version_stage = read_version_json(args.input)
    write_version_py(
        (version_number, version_int, args.stage or version_stage), args.output
    )
