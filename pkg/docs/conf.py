# -*- coding: utf-8 -*-
#
# NicholsPy documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath('../'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.imgmath',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'NicholsPy'
copyright = u'2026, NicholsPy developers'

version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'NicholsPydoc'

latex_documents = [
  ('index', 'NicholsPy.tex', u'NicholsPy Documentation',
   u'NicholsPy developers', 'manual'),
]

man_pages = [
    ('index', 'nicholspy', u'NicholsPy Documentation',
     [u'NicholsPy developers'], 1)
]
