"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (domset._accel falls back to the
pure-Python kernels); set DOMSET_NO_EXT=1 to skip the build entirely.
"""
import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("DOMSET_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext = Extension(
            "domset._ckernels",
            ["src/domset/_ckernels.pyx"],
            optional=True,
        )
        extensions = cythonize([ext], language_level=3)

setup(ext_modules=extensions)
