"""Build script for the optional compiled kernels.

The compiled extension accelerates the two hot loops (the valuation sweep and
integer matrix diagonalization); the package falls back to the pure-Python
kernels when it is absent, so a build without Cython still works.

Build in place with: python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("autorbit._speedups", ["src/autorbit/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
