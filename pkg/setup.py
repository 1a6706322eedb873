import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CYCLORBIT_NO_EXT", "") not in ("1", "true"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cyclorbit._speedups", ["src/cyclorbit/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython: install pure Python only, the backend selector copes.
        ext_modules = []

setup(ext_modules=ext_modules)
