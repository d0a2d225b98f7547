"""Build the optional compiled kernels.

The Cython extension is optional: when Cython or a C compiler is missing the
package installs without it and ``morseres._kernels`` falls back to the
pure-Python implementation at import time.
"""
import os

from setuptools import setup


def gather_extensions():
    if os.environ.get("MORSERES_NO_EXT"):
        return []
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    extensions = [
        Extension(
            "morseres._kernels._ckernels",
            [os.path.join("src", "morseres", "_kernels", "_ckernels.pyx")],
            include_dirs=[np.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            extra_compile_args=["-O3"],
        )
    ]
    return cythonize(extensions, compiler_directives={"language_level": "3"}, quiet=True)


setup(ext_modules=gather_extensions())
