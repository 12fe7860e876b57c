#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# python-ghalg documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package lives in the src layout.
sys.path.insert(0, os.path.abspath(os.path.join('..', 'src')))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

source_suffix = '.rst'
master_doc = 'index'

project = 'python-ghalg'
copyright = '2019 Timothy Pederick'
author = 'Timothy Pederick'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1'

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'python-ghalgdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_documents = [
    (master_doc, 'python-ghalg.tex', 'python-ghalg Documentation',
     author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'python-ghalg', 'python-ghalg Documentation',
     [author], 1)
]
