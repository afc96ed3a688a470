import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: ship the pure-Python kernels only.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "kghier._kernels",
                ["src/kghier/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
