"""Build script: compiles the optional solver kernel when Cython is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so a missing compiler or missing Cython must not fail the build.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/wardengame/_dense.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
