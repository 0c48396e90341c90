"""
Setup file for cubicfold
"""
import pathlib
from setuptools import setup, find_packages

# The directory containing this file
HERE = pathlib.Path(__file__).parent

# The text of the README file
README = (HERE / "README.md").read_text()

setup(
    name="cubicfold",
    version="0.1.0",
    description="Exact verification of the computational claims on cubic fourfolds with symplectic automorphisms",
    long_description=README,
    long_description_content_type="text/markdown",
    license="MIT",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=("test", "test.*")),
    include_package_data=True,
    package_data={"cubicfold.report": ["schema/*.json"]},
    python_requires=">=3.9",
    install_requires=[
        "pydantic>=1.10,<2",
        "python-dotenv",
        "sympy>=1.9",
        "jsonschema>=3.2",
    ],
    entry_points={
        "console_scripts": [
            "cubicfold=cubicfold.cli:main",
        ],
    },
)
