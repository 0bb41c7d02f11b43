from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "psca._kernels_c",
                ["src/psca/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: install pure-Python only; psca.kernels falls back at import.
    ext_modules = []

setup(ext_modules=ext_modules)
