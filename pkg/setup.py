"""Builds the optional Cython kernels; the package works without them."""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HANOIFIB_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            "src/hanoifib/_kernels.pyx",
            compiler_directives={"boundscheck": False, "wraparound": False, "cdivision": True},
        )
        for ext in ext_modules:
            ext.include_dirs.append(numpy.get_include())
            ext.name = "hanoifib._kernels"

setup(ext_modules=ext_modules)
