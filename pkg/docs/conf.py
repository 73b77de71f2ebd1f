# -*- coding: utf-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

# Sphinx configuration of the compat-reason documentation.

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.autosummary',
              'sphinx.ext.intersphinx']
extlinks = {}
intersphinx_mapping = {}

autosummary_generate = True

from atelier.sphinxconf import interproject
interproject.configure(globals(), 'atelier')

intersphinx_mapping['numpy'] = ('https://numpy.org/doc/stable', None)

project = u"compat-reason"
copyright = '2026 compat-reason contributors'

from compat_reason import __version__
release = __version__
version = '.'.join(__version__.split('.')[:2])

language = 'en'

exclude_patterns = [
    '.build/*',
]

pygments_style = 'sphinx'

html_title = u"compat-reason"
html_last_updated_fmt = '%b %d, %Y'
html_sidebars = {
    '**': ['globaltoc.html', 'searchbox.html'],
}
html_use_index = True
html_copy_source = False
htmlhelp_basename = 'compat_reason'
