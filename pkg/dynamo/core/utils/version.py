# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""PEP 440 version strings from the ``VERSION`` tuple.

``VERSION`` is ``(major, minor[, micro], release, serial)`` with
``release`` one of ``alpha``, ``beta``, ``rc`` or ``final``.
"""

from dynamo.constants import VERSION


RELEASE_SUFFIXES = {"alpha": "a", "beta": "b", "rc": "rc"}


def _split(version):
    for pos, part in enumerate(version):
        if part == "final" or part in RELEASE_SUFFIXES:
            return version[:pos], part, version[pos + 1]
    raise ValueError("No release marker in %r" % (version,))


def get_main_version(version=None):
    """``X.Y[.Z]`` of ``version``, or of the running package."""
    numbers, _, _ = _split(VERSION if version is None else version)
    return ".".join(str(number) for number in numbers)


def get_version(version=None):
    """The full version: ``alpha 0`` marks a development snapshot.

    >>> get_version((0, 3, 1, 'alpha', 0))
    '0.3.1.dev0'
    >>> get_version((0, 3, 1, 'beta', 1))
    '0.3.1b1'
    """
    version = VERSION if version is None else version
    main = get_main_version(version)
    _, release, serial = _split(version)
    if release == "final":
        return main
    if release == "alpha" and serial == 0:
        return "%s.dev0" % main
    return "%s%s%d" % (main, RELEASE_SUFFIXES[release], serial)
