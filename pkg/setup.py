"""Build script: compiles the optional kernel extension.

The package is pure Python; the extension only accelerates the dense
convolution and quadrature kernels.  If Cython or a C compiler is missing
the build falls back to the pure-Python kernels selected at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "bernkit._ckernels",
        sources=["src/bernkit/_ckernels.pyx"],
        extra_compile_args=["-O2"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
