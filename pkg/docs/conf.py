#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# lie-contractions documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'lie-contractions'
copyright = '2026, The lie-contractions developers'
author = 'The lie-contractions developers'

# The short X.Y version
version = '0.1'
# The full version, including alpha/beta/rc tags
release = ''


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinxcontrib.jsonschema',
]

templates_path = ['_templates']
source_suffix = '.rst'
napoleon_include_special_with_doc = True
master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

import sphinx_rtd_theme
html_show_copyright = False
html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
htmlhelp_basename = 'lie-contractionsdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {
    'papersize': 'letterpaper',
    'pointsize': '10pt',
}

latex_documents = [
    (master_doc, 'lie-contractions.tex', 'lie-contractions Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'lie-contractions', 'lie-contractions Documentation',
     [author], 1)
]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}

autoclass_content = 'both'  # class docstring plus __init__ docstring
autodoc_member_order = 'bysource'
