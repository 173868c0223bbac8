from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("conelab._kernels", ["src/conelab/_kernels.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level="3"))
