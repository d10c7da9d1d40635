# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import os

from django.conf import ENVIRONMENT_VARIABLE, settings


DEFAULTS = {
    "DYNAMO_ENUMERATION_BUDGET": 10 ** 7,
    "DYNAMO_BACKWARD_DEPTH": 8,
    "DYNAMO_BACKWARD_LOOKAHEAD": 2,
    "DYNAMO_SUSPECT_BAND": 2,
    "DYNAMO_DEFAULT_PRECISION": 16,
}


def get_setting(name):
    """Reads a ``DYNAMO_*`` setting, falling back to its default when the
    library is used without a Django settings module.
    """
    if settings.configured or os.environ.get(ENVIRONMENT_VARIABLE):
        return getattr(settings, name, DEFAULTS[name])
    return DEFAULTS[name]


def get_budget(budget=None):
    if budget is None:
        return get_setting("DYNAMO_ENUMERATION_BUDGET")
    return budget
