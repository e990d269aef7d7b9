"""Build hook: compile the optional echelon kernel when Cython is available.

The package is pure Python by contract; the compiled kernel is a drop-in
accelerator for the sparse integer row-reduction inner loops.  If Cython (or a
C compiler) is missing the build silently falls back to the pure kernel.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ellchow/exactring/_echelon_c.pyx"],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
