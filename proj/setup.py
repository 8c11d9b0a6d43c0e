# Builds the sarkisov._core extension straight from the C++ sources so the
# wheel does not need a separate CMake run. The CMake tree stays the primary
# build for tests and the CLI; keep the two source lists in sync by globbing.
import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "sarkisov._core",
    sources=sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
