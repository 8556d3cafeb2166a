from setuptools import setup, find_packages

import os.path as op

from tools.generate_version import read_version_json, write_version_py


version_py_path = op.join(op.dirname(__file__), "deltashell", "version.py")

VERSION = read_version_json(op.join(".", "version.json"))
write_version_py(VERSION, version_py_path)
VERSION_NUMBER = VERSION[0]


def remove_git_and_http_package_links(uris):
    for uri in uris:
        if uri.startswith("git+") or uri.startswith("https:"):
            continue
        yield uri


packs = find_packages(include=["deltashell*"])

with open("./requirements.txt") as requirements_fp:
    required_packages = [
        line.strip()
        for line in remove_git_and_http_package_links(requirements_fp.readlines())
        if line.strip()
    ]

setup(
    name="deltashell-core",
    version=".".join(map(str, VERSION_NUMBER)),
    description="Bound state counting and spectral verdicts for concentric delta shell "
    "Schrodinger operators",
    packages=packs,
    include_package_data=True,
    install_requires=required_packages,
    entry_points={"console_scripts": ["deltashell=deltashell.command_line:main"]},
)
