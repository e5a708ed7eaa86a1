from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "sqzchain._kernels",
                ["src/sqzchain/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    ),
)
