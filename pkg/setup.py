"""Build glue for the optional compiled kernel.

The package is fully functional without the extension (a pure-Python
backend with identical signatures is selected at import time), so the
extension is marked optional: a missing compiler degrades to the fallback
instead of failing the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # source checkout without Cython: pure backend only
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "hexwp._kernels_c",
                ["src/hexwp/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=extensions)
