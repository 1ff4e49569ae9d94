"""Build script for the optional compiled sweep kernel.

The package works without the extension; kernel.py falls back to the
pure-Python sweep when the import fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy

    extensions = cythonize(
        [
            Extension(
                "colorquot._sweepcore",
                sources=["src/colorquot/_sweepcore.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
