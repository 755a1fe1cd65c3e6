# Sphinx configuration of the affinelogic documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('../'))

import affinelogic

project = 'affinelogic'
copyright = '2026, affinelogic developers'
author = 'affinelogic developers'
release = affinelogic.__version__

extensions = [
    'sphinx.ext.autodoc', 'sphinx.ext.autosummary', 'sphinx.ext.viewcode', 'sphinx.ext.doctest',
    'sphinx.ext.mathjax', 'sphinx.ext.napoleon', 'recommonmark'
]
# docstrings are Google style with Args/Returns/Raises sections
napoleon_google_docstring = True
autoclass_content = 'both'
autodoc_member_order = 'bysource'

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']

master_doc = 'index'
