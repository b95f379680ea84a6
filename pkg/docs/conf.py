# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

project = 'steinercodes'

version = ''
release = ''

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx_autodoc_typehints',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
]

master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'steinercodesdoc'

nitpicky = True
nitpick_ignore = [
    ('py:class', 'numpy.ndarray'),
    ('py:class', 'R'),  # generic type parameter
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}

autodoc_member_order = 'bysource'
add_module_names = False
default_role = 'any'
autodoc_default_options = {
    'members': None,
    'show-inheritance': None,
}
autoclass_content = 'both'
