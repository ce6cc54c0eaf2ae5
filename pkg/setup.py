"""Build script: compiles the optional Cython kernel extension when possible.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so any
failure here degrades gracefully to a pure-Python install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy

    ext_modules = cythonize(
        ["src/wfact/_core.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )
    for ext in ext_modules:
        ext.include_dirs.append(numpy.get_include())
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"wfact: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
