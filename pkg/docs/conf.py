# Sphinx configuration for the pyqsc documentation.
import re
from pathlib import Path

project = 'pyqsc'
copyright = '2026, pyqsc developers'
author = 'pyqsc developers'

_setup = (Path(__file__).parent.parent / 'setup.py').read_text()
release = version = re.search(r'version="([^"]+)"', _setup).group(1)

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx',
    'sphinx.ext.doctest',
]
napoleon_use_param = True
autodoc_member_order = 'bysource'

master_doc = 'index'
source_suffix = '.rst'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'pyqscdoc'
man_pages = [(master_doc, 'pyqsc', 'pyqsc Documentation', [author], 1)]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'galois': ('https://galois.readthedocs.io/en/stable', None),
}
