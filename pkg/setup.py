"""Builds the optional Cython kernels; the package still imports without them."""
import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("MONOCRYSTAL_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "monocrystal._speedups",
        ["src/monocrystal/_speedups.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"}, quiet=True)


setup(ext_modules=extensions())
