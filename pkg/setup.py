from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("planocc._kernels", ["src/planocc/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # pure-Python fallback in planocc._kernels_py is used instead
    ext_modules = []

setup(ext_modules=ext_modules)
