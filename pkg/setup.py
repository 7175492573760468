from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("moplexkit._kernels_c", ["src/moplexkit/_kernels_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install pure-Python only, the kernel
    # dispatcher falls back automatically.
    ext_modules = []

setup(ext_modules=ext_modules)
