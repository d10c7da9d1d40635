# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

from django.core import checks

from dynamo.core.utils.conf import DEFAULTS


# Minimum accepted value of each integer setting.
SETTING_MINIMUMS = {
    "DYNAMO_ENUMERATION_BUDGET": 1,
    "DYNAMO_BACKWARD_DEPTH": 0,
    "DYNAMO_BACKWARD_LOOKAHEAD": 0,
    "DYNAMO_SUSPECT_BAND": 0,
    "DYNAMO_DEFAULT_PRECISION": 1,
}


@checks.register()
def check_settings(app_configs=None, **kwargs):
    from django.conf import settings

    errors = []

    for index, name in enumerate(sorted(SETTING_MINIMUMS), start=1):
        value = getattr(settings, name, DEFAULTS[name])
        minimum = SETTING_MINIMUMS[name]
        if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
            errors.append(
                checks.Critical(
                    "%s = %r is not an integer >= %d." % (name, value, minimum),
                    hint="Fix %s in your settings." % name,
                    id="dynamo.C%03d" % index,
                )
            )

    if "dynamo" not in settings.LOGGING.get("loggers", {}):
        errors.append(
            checks.Warning(
                "No 'dynamo' logger is configured.",
                hint="Experiment progress will not be logged.",
                id="dynamo.W001",
            )
        )

    return errors
