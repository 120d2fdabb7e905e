"""Build script: compiles the optional geometry kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set HOROBALL_NO_EXT=1 to skip the
compile step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HOROBALL_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        # No -ffast-math / -march: the extension must stay bit-identical to
        # the pure-Python kernels (same IEEE ops, same libm calls).
        ext_modules = cythonize(
            [
                Extension(
                    "horoball._speedups",
                    ["src/horoball/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
