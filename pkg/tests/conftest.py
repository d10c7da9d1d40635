# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import logging
import os
from pkgutil import iter_modules

from django import setup
from django.conf import settings

from . import fixtures


logging.getLogger("factory").setLevel(logging.WARN)

TESTS_DIR = os.path.abspath(os.path.dirname(__file__))

# Executed by dynamo.settings, not a test module.
collect_ignore = ["settings.py"]


def pytest_configure(config):
    if settings.configured:
        return
    os.environ["DJANGO_SETTINGS_MODULE"] = "dynamo.settings"
    os.environ["DYNAMO_SETTINGS"] = os.path.join(TESTS_DIR, "settings.py")
    setup()


def fixture_modules(package):
    """Dotted names of the fixture modules in ``package``, loaded as
    plugins so their fixtures are visible to every test.
    """
    prefix = "%s." % package.__name__
    return tuple(
        name
        for _, name, is_pkg in iter_modules(package.__path__, prefix)
        if not is_pkg
    )


pytest_plugins = fixture_modules(fixtures)
