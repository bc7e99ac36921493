#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# setup.py

# Use a consistent encoding
from codecs import open

from setuptools import find_packages, setup

with open("README.md", encoding="utf-8") as f:
    readme = f.read()

about = {}
with open("./densecert/__about__.py", encoding="utf-8") as f:
    exec(f.read(), about)

install_requires = [
    "numpy >=1.20.0",
    "psutil >=2.1.1",
    "pyyaml >=3.13",
    "sympy >=1.9,<1.13",
    "tblib >=1.3.2",
    "tqdm >=4.20.0",
]

setup(
    name=about["__title__"],
    version=about["__version__"],
    description=about["__description__"],
    author=about["__author__"],
    author_email=about["__author_email__"],
    url=about["__url__"],
    license=about["__license__"],
    long_description=readme,
    long_description_content_type="text/markdown",
    install_requires=install_requires,
    python_requires=">=3.8",
    keywords=(
        "number-theory quadratic-fields s-units local-units density "
        "honda-tate quaternion-algebras certification"
    ),
    packages=find_packages(exclude=["docs", "test"]),
    include_package_data=True,
    zip_safe=False,
    entry_points={"console_scripts": ["densecert=densecert.cli:main"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    project_urls={"Bug Reports": about["__url__"] + "/issues"},
)
