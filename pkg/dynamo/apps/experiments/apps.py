# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

from django.apps import AppConfig


class ExperimentsConfig(AppConfig):
    name = "dynamo.apps.experiments"
    label = "experiments"
    verbose_name = "Experiments"

    def ready(self):
        from dynamo import checks  # noqa
