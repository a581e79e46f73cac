# -*- coding: utf-8 -*-
#
# gazelle-bench documentation build configuration file.

import sys
import os

# The modules are documented with autodoc, so the repository root has to be importable
sys.path.insert(0, os.path.abspath('..'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'gazelle-bench'
copyright = u'2026, gazelle-bench contributors'
author = u'gazelle-bench contributors'

version = u'1.0'
release = u'1.0'

language = 'en'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = True

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'gazelle-benchdoc'
