from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; kernels fall back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/posicert/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
