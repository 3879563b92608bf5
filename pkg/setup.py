from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("einets._kernels", ["src/einets/_kernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
