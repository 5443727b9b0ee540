import os

from setuptools import Extension, setup

ext_modules = [
    Extension(
        "sdglens._kernels._ckernels",
        ["src/sdglens/_kernels/_ckernels.pyx"],
    )
]


def maybe_cythonize():
    # Compiled kernels are optional: without Cython (or with the env switch
    # set) the package installs pure-Python only and selects the fallback
    # backend at import time.
    if os.environ.get("SDGLENS_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(ext_modules, language_level="3")


setup(ext_modules=maybe_cythonize())
