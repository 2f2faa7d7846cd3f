from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install without the compiled kernel; the pure-Python
    # backend is selected at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("flatgraph._kernels._cspan",
                   ["src/flatgraph/_kernels/_cspan.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
