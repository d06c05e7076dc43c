"""Builds the optional compiled orbit kernel.  The package works without it
(the pure-Python fallback is selected at import time), so a failed Cython
build degrades to a warning rather than an install failure."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/kronkit/_kernels/_core.pyx"], language_level=3
    )
except Exception as exc:  # pragma: no cover - environment-dependent
    import warnings

    warnings.warn(f"compiled kernel skipped: {exc}")

setup(ext_modules=ext_modules)
