"""Build script: compiles the optional kernel extension when Cython is available.

The package is fully functional without the extension; the pure-NumPy fallback
in relperc.kernels._fallback is selected automatically at import time.
"""

from setuptools import setup

extensions = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "relperc.kernels._ckernels",
                ["src/relperc/kernels/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=extensions)
