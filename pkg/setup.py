import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GWML_SKIP_EXT") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gwml._kernels._scan_cy",
                    sources=["src/gwml/_kernels/_scan_cy.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython at build time: install the pure-python package; the
        # kernel shim falls back to the numpy implementation at import.
        ext_modules = []

setup(ext_modules=ext_modules)
