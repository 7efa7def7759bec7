from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled kernel is optional: if the build fails, the package falls back
# to the pure numpy implementation selected at import time in lawson3.kernels.
ext = Extension(
    "lawson3._kernels",
    ["src/lawson3/_kernels.pyx"],
    extra_compile_args=["-O3"],
)
ext.optional = True

setup(ext_modules=cythonize([ext], language_level=3))
