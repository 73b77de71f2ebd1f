# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

SETUP_INFO = dict(
    name='compat-reason',
    version='0.1.0',
    install_requires=['numpy', 'joblib', 'unipath', 'Django>=3.2',
                      'Pillow>=9.2'],
    tests_require=['pytest'],
    test_suite='tests',
    description="Outfit compatibility judgments with reasons",
    long_description=u"""

**compat-reason** judges whether a top and a bottom make a good, normal
or bad outfit and tells why: because of the color, the print or the
design of the garments.

- A small network computes one compatibility feature per style factor
  (color, print, material, silhouette, design details) and a judgment
  from their concatenation.

- The reason of a judgment is read from the gradients of the judgment
  logits with respect to these features.  During training, a
  regularizer on these gradients teaches the network to use the right
  factor.  It needs gradients of gradients, which the built-in
  automatic differentiation provides.

- A generator of synthetic outfits with planted rules, the training
  loop, the evaluation harness and the sentence templates are
  included, all driven from the command line.

""",
    author='compat-reason contributors',
    license='BSD License',
    entry_points=dict(console_scripts=[
        'compat-reason = compat_reason.management:main',
    ]),
    classifiers="""\
Programming Language :: Python
Programming Language :: Python :: 3
Development Status :: 3 - Alpha
Environment :: Console
Intended Audience :: Science/Research
License :: OSI Approved :: BSD License
Operating System :: OS Independent
Topic :: Scientific/Engineering :: Artificial Intelligence
""".splitlines())

SETUP_INFO.update(packages=[
    'compat_reason',
    'compat_reason.lib',
    'compat_reason.lib.compat',
    'compat_reason.lib.autodiff',
    'compat_reason.lib.colorfeat',
    'compat_reason.lib.compatnet',
    'compat_reason.lib.reasoning',
    'compat_reason.lib.synthdata',
    'compat_reason.lib.training',
    'compat_reason.lib.evalharness',
    'compat_reason.lib.explain',
    'compat_reason.management',
    'compat_reason.management.commands',
])

SETUP_INFO.update(
    package_data={
        'compat_reason.lib.explain': ['config/*.txt'],
    },
    zip_safe=False,
    include_package_data=True)
