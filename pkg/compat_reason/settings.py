# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The Django settings used by the command line.

Only the management command machinery is used: there is no database
and no web server.  The plugin settings of a run live in a
:class:`Site <compat_reason.lib.compat.settings.Site>`, not here.

"""

SECRET_KEY = 'not-used'

INSTALLED_APPS = ['compat_reason']

DATABASES = {}

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'short': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'formatter': 'short',
        },
    },
    'loggers': {
        'compat_reason': {
            'handlers': ['stderr'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}
