"""Builds the optional compiled scoring kernel.

The package works without it (a pure-Python kernel is selected at import
time), so any failure here downgrades to a source-only install instead of
aborting.
"""

import os

from setuptools import setup

KERNEL_SRC = "src/lmcritic/_kernel_cy.pyx"

ext_modules = []
if os.path.exists(KERNEL_SRC):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            KERNEL_SRC,
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": False,
            },
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
