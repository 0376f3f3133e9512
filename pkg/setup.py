"""Build the optional Cython refinement kernel.

The package works without it: ``htgaut.aut.kernel`` falls back to the pure
Python implementation when the compiled module cannot be imported.
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
                "htgaut.aut._refine_c",
                ["src/htgaut/aut/_refine_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )

setup(ext_modules=ext_modules)
