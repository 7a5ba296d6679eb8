"""Build script: compiles the optional Cython kernel core.

The package works without the extension (a numpy fallback is selected at
import time), so a missing compiler or Cython only costs speed, not
functionality.
"""

import sys

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    extensions = cythonize(
        [
            Extension(
                "eccd._kernels._core",
                ["src/eccd/_kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                # keep FP semantics identical to the numpy fallback:
                # no FMA contraction, no fast-math reassociation
                extra_compile_args=["-O3", "-ffp-contract=off"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"eccd: skipping compiled kernels ({exc}); pure-python fallback "
          f"will be used", file=sys.stderr)
    extensions = []

setup(ext_modules=extensions)
