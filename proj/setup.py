import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        out_path = Path.cwd() / self.get_ext_fullpath(ext.name)
        build_temp = Path(self.build_temp) / ext.name.split(".")[-1]
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            "-DCMAKE_BUILD_TYPE=Release",
            "-DSKBUILD=ON",  # wheel layout: extension only, no test targets
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(
            ["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "--parallel"],
            cwd=build_temp,
            check=True,
        )

        built = sorted(build_temp.glob("python/_core.*.so")) or sorted(
            build_temp.glob("python/_core*.so")
        )
        if not built:
            raise RuntimeError("CMake build did not produce the _core module")
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_bytes(built[0].read_bytes())


setup(
    packages=["su11kc"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("su11kc._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
