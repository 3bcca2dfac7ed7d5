from setuptools import Extension, setup

# The tree-walk kernel is an optional compiled extension.  When Cython is
# unavailable the package still installs and falls back to the pure-Python
# kernel at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("evenzeta._treewalk", ["src/evenzeta/_treewalk.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
