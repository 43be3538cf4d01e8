"""Build script: compiles the optional fraction-free determinant kernel.

The package is fully functional without the extension; lampk.intdet falls
back to the pure-Python kernel when the compiled module is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "lampk._detcore",
                sources=["src/lampk/_detcore.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
