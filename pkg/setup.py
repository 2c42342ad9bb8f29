from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("spherelink._kernels", ["src/spherelink/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    ),
)
