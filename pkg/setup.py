"""Build the optional compiled kernel; the package falls back to numpy without it."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: pure numpy install
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "orbimgs._kernel",
                ["src/orbimgs/_kernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
