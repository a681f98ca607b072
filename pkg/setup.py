"""Builds the optional compiled kernels; without Cython or a compiler the
package installs as pure Python and selects the fallback at import."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SPLITLAW_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("splitlaw._kernels", ["src/splitlaw/_kernels.pyx"], extra_compile_args=["-O3"])],
            language_level=3,
        )
    except ImportError:
        pass


try:
    from setuptools.command.build_ext import build_ext as _build_ext

    class build_ext(_build_ext):
        def run(self):
            try:
                super().run()
            except Exception as exc:  # noqa: BLE001
                print(f"warning: compiled kernels not built ({exc}); using pure Python")

        def build_extension(self, ext):
            try:
                super().build_extension(ext)
            except Exception as exc:  # noqa: BLE001
                print(f"warning: {ext.name} not built ({exc}); using pure Python")

    cmdclass = {"build_ext": build_ext}
except ImportError:
    cmdclass = {}

setup(ext_modules=ext_modules, cmdclass=cmdclass)
