"""Build shim: drives the CMake build of the `_core` extension from setuptools.

scikit-build-core is not available in this environment, so a classic
build_ext override configures and builds the CMake project, directing the
extension module into the location setuptools expects (the source package
directory for editable installs, the staging dir for wheels).
"""

import subprocess
import sys
from pathlib import Path

from setuptools import setup, Extension
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        module_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        module_dir.mkdir(parents=True, exist_ok=True)
        build_temp = Path(self.build_temp).resolve() / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            ext.sourcedir,
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DISOCLASS_PYTHON_MODULE_DIR={module_dir}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DISOCLASS_BUILD_TESTS=OFF",
            "-DISOCLASS_BUILD_PYTHON=ON",
        ]
        subprocess.run(configure, cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "--parallel"],
            cwd=build_temp,
            check=True,
        )


setup(
    name="isoclass",
    version="1.0.0",
    description=(
        "Isogeny classes over finite fields, Weil polynomial censuses, "
        "and additive-combinatorics constructions"
    ),
    packages=["isoclass"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("isoclass._core")],
    cmdclass={"build_ext": CMakeBuild},
    python_requires=">=3.9",
    zip_safe=False,
)
