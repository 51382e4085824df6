"""Build script: compiles the optional speedup extension.

The package works without the extension (pure-Python kernels are selected at
import time), so a failed compile only costs performance, not functionality.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("edvar._speedups", ["src/edvar/_speedups.pyx"])],
        language_level=3,
        quiet=True,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"warning: speedup extension not built ({exc}); using pure-Python kernels")
    extensions = []

setup(ext_modules=extensions)
