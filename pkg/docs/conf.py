#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# interval-consensus documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('../'))
from consensus import version as consensus_version

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'interval-consensus'
copyright = '2026, the interval-consensus developers'
author = 'the interval-consensus developers'

version = str(consensus_version.__version__)
release = str(consensus_version.__version__)

language = None
pygments_style = 'sphinx'
todo_include_todos = False

# the implementation package is documented through the facade
exclude_patterns = ["binary_consensus_impl"]

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']
htmlhelp_basename = 'interval-consensus-pydoc'

# -- Options for LaTeX and manual page output -----------------------------

latex_documents = [
    (master_doc, 'interval-consensus.tex', 'interval-consensus Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'interval-consensus', 'interval-consensus Documentation', [author], 1)
]

# -- autodoc --------------------------------------------------------------

autodoc_mock_imports = ["numpy", "pandas", "scipy", "networkx"]

autodoc_default_options = {
    'members': None,
    'member-order': 'bysource',
    'special-members': '__init__',
    'exclude-members': '__weakref__'
}
