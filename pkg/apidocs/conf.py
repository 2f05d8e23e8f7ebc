# Sphinx configuration for the threestage API docs
#
# Build with build_docs.sh, which regenerates the stubs in api/ first.

import os
import sys

HERE_PATH = os.path.abspath(os.path.dirname(__file__))
ROOT_PATH = os.path.abspath(os.path.join(HERE_PATH, ".."))
sys.path.insert(0, ROOT_PATH)

from threestage import APP_NAME, VERSION  # noqa: E402

# -- Project information -----------------------------------------------------

project = APP_NAME
copyright = 'threestage developers'
author = 'threestage developers'
version = VERSION
release = VERSION

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode',
    'sphinx_autodoc_typehints',
]

master_doc = 'index'
exclude_patterns = ['_build', 'requirements.txt']

primary_domain = 'py'
highlight_language = 'py'

autodoc_member_order = 'bysource'
autodoc_default_options = {
    'members': True,
    'undoc-members': True,
    'show-inheritance': True,
}
autoclass_content = 'both'

# Docstrings use the reST field list style, not Google or NumPy sections
napoleon_google_docstring = False
napoleon_numpy_docstring = False

# -- Options for HTML output -------------------------------------------------

html_title = f'{APP_NAME} {VERSION} API docs'
html_short_title = APP_NAME

html_theme = 'sphinxbootstrap4theme'
import sphinxbootstrap4theme  # noqa: E402
html_theme_path = [sphinxbootstrap4theme.get_path()]

html_theme_options = dict(
    navbar_color_class="light",
    navbar_bg_class="light",
    navbar_show_pages=False,
    show_sidebar=True,
    sidebar_right=False,
)

html_sidebars = {'**': ['about.html', 'globaltoc.html']}
html_show_sourcelink = False
html_show_sphinx = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}
