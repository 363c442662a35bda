import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SPINTANGLE_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "spintangle.kernels._compiled",
                    ["src/spintangle/kernels/_compiled.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython at build time: install pure-Python only; the kernel
        # package falls back to the reference implementation at import.
        ext_modules = []

setup(ext_modules=ext_modules)
