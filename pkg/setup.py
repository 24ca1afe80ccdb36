from setuptools import Extension, setup

# The compiled search kernels are optional: the package imports a pure-Python
# fallback when the extension is absent, so a plain-Python install still works.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mmk._kernels", ["src/mmk/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
