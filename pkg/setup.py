"""Builds the optional compiled row-reduction kernel.

If Cython or a C compiler is unavailable the package still installs and uses
the numpy fallback in ``hhsl2._rref_py``.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("HHSL2_NO_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("hhsl2._rref_cy", ["src/hhsl2/_rref_cy.pyx"],
                       include_dirs=[np.get_include()],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
