"""Build script for the optional compiled kernels.

The Cython extension is skipped (and the pure-Python kernels are used at
import time) when Cython is unavailable, compilation fails, or
BARCODE_STRATA_NO_EXT is set.
"""
import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled kernels not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: failed to build {ext.name} ({exc}); using pure Python")


def ext_modules():
    if os.environ.get("BARCODE_STRATA_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    if not os.path.exists("src/barcode_strata/_ckernels.pyx"):
        return []
    extensions = [
        Extension(
            "barcode_strata._ckernels",
            ["src/barcode_strata/_ckernels.pyx"],
            extra_compile_args=["-O3"],
        )
    ]
    try:
        return cythonize(
            extensions,
            language_level="3",
            compiler_directives={"boundscheck": False, "wraparound": False, "cdivision": True},
        )
    except Exception as exc:  # noqa: BLE001
        print(f"warning: cythonize failed ({exc}); using pure Python")
        return []


setup(ext_modules=ext_modules(), cmdclass={"build_ext": optional_build_ext})
