from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension("stablekit._ckernels", ["src/stablekit/_ckernels.pyx"])

setup(ext_modules=cythonize([ext], language_level=3))
