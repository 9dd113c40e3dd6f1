# -*- coding: utf-8 -*-
#
# Majorana States documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

sys.path.insert(0,
  os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))
import majoranastates

# Catalogue states are module data re-exported by the package; document them
# under the module that defines them.
import sphinx.ext.autodoc
def __get_real_modname(self):
	return self.get_attr(self.parent or self.object, '__module__', None) \
		or self.modname
sphinx.ext.autodoc.DataDocumenter.get_real_modname = __get_real_modname

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Majorana States'
copyright = majoranastates.__copyright__
version = majoranastates.__version__
release = majoranastates.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'Majoranastatesdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}
latex_documents = [
  ('index', 'MajoranaStates.tex', u'Majorana States Documentation',
   u'majoranastates contributors', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'majoranastates', u'Majorana States Documentation',
     [u'majoranastates contributors'], 1)
]
