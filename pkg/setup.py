#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import os

from setuptools import find_packages, setup

from dynamo import __version__


def parse_requirements(file_name):
    """Package specifiers of a pip requirements file, for
    ``install_requires``. Comments and ``-r`` includes are skipped.
    """
    with open(file_name, encoding="utf-8") as f:
        lines = (line.split("#", 1)[0].strip() for line in f)
        return [line for line in lines if line and not line.startswith("-")]


setup(
    name="padic-dynamo",
    version=__version__,
    description="Experiments on the dynamics of lifts of p-th power maps over "
    "unramified p-adic rings.",
    long_description=open(os.path.join(os.path.dirname(__file__), "README.md")).read(),
    long_description_content_type="text/markdown",
    author="padic-dynamo contributors",
    license="GNU General Public License 3 or later (GPLv3+)",
    install_requires=parse_requirements("requirements/base.txt"),
    python_requires=">=3.8",
    platforms=["any"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Framework :: Django",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    zip_safe=False,
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"dynamo": ["settings/*.conf"]},
    include_package_data=True,
    entry_points={"console_scripts": ["padic-dynamo = dynamo.runner:main"]},
)
