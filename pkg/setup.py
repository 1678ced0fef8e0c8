import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PERMMIND_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("permmind._speedups", ["src/permmind/_speedups.pyx"])],
            language_level="3",
        )

setup(ext_modules=ext_modules)
