"""Build script.

The trust-history kernel has an optional Cython implementation. If Cython
(or a C compiler) is unavailable the build still succeeds and the package
falls back to the pure-Python kernel at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/setd2d/trust/_histcore_c.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build env
    print(f"setd2d: building without the compiled kernel ({exc})")

setup(ext_modules=ext_modules)
