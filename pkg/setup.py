"""Build script.

The Smith normal form kernel has a compiled twin (Cython).  The build is
optional: if cythonization or compilation fails for any reason the package
installs anyway and falls back to the pure Python kernel at import time.
Set SLICEALG_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SLICEALG_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/slicealg/exact/_snfcore.pyx"],
            language_level=3,
        )
    except Exception as exc:  # pragma: no cover
        print("slicealg: skipping compiled kernel (%s)" % exc)

setup(ext_modules=ext_modules)
