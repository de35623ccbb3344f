"""Build script for the optional compiled kernel module.

The package works without the extension (heisaut._backend falls back to
the pure-Python kernels); set HEISAUT_NO_EXT=1 to skip compilation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HEISAUT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("heisaut._speedups", ["src/heisaut/_speedups.pyx"])],
            language_level="3",
        )

setup(ext_modules=ext_modules)
