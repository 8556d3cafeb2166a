# Sphinx configuration for the deltashell documentation.
# Build with: sphinx-build docs_source docs_build/html

import os
import sys

_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, _root)

from tools.generate_version import read_version_json

_number, _, _stage = read_version_json(os.path.join(_root, "version.json"))

project = "deltashell"
copyright = "2024, The deltashell Team"
author = "The deltashell Team"
version = ".".join(str(part) for part in _number[:2])
release = ".".join(str(part) for part in _number) + f"-{_stage}"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx_autodoc_typehints",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
]
autodoc_member_order = "bysource"

master_doc = "index"
exclude_patterns = []
pygments_style = "sphinx"

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = "deltashelldoc"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
}
