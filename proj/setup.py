from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/zeta.cpp",
    "src/smoothness.cpp",
    "src/cech.cpp",
    "src/equivariant.cpp",
    "src/quadrature.cpp",
    "src/config.cpp",
    "src/report.cpp",
    "src/suite.cpp",
]

ext = Pybind11Extension(
    "coverdet._coverdet",
    sources=["python/module.cpp"] + core_sources,
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    packages=["coverdet"],
    package_dir={"coverdet": "python/coverdet"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
