"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python backend is selected
at import time), so a failed Cython build is not fatal for installation
from source without Cython.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy as np

    ext_modules = cythonize(
        [
            Extension(
                "swarmlab.kernels._ckernels",
                sources=["src/swarmlab/kernels/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
