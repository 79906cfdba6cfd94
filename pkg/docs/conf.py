# -*- coding: utf-8 -*-
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import os
import sys

config_directory = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.abspath('.'))
sys.path.insert(0, os.path.dirname(config_directory))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autosummary',
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.ifconfig',
    'reno.sphinxext',
]

autosummary_generate = True

source_suffix = ['.rst']

master_doc = 'index'

project = u'atiyah'
copyright = u'2026, The atiyah developers'
author = u'The atiyah developers'

import atiyah
version = atiyah.__version__
release = atiyah.__version__

language = None

add_module_names = False
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

linkcheck_retries = 2
linkcheck_anchors = False

pygments_style = 'sphinx'

todo_include_todos = True

modindex_common_prefix = ['atiyah.']

doctest_global_setup = """
import atiyah

"""

# -- Options for HTML output ----------------------------------------------

import sphinx_rtd_theme
html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

htmlhelp_basename = 'atiyahdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'atiyah.tex', u'atiyah Documentation',
     u'The atiyah developers', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'atiyah', u'atiyah Documentation',
     [author], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (master_doc, 'atiyah', u'atiyah Documentation',
     author, 'atiyah', 'Atiyah bundles on elliptic curves and their evaluation codes.',
     'Miscellaneous'),
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None)}
