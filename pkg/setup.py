"""Build the optional compiled search kernel.

If Cython or a C compiler is missing the package still installs and falls
back to the pure-Python kernel.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("nsd_forge.exact._kernel", ["src/nsd_forge/exact/_kernel.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
