"""Build the optional compiled kernels; the package works without them."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SLICEKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("slicekit._ckernels", ["src/slicekit/_ckernels.pyx"])],
            compiler_directives={"language_level": 3, "boundscheck": False,
                                 "wraparound": False},
        )

setup(ext_modules=ext_modules)
