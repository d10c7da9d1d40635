# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

VERSION = (0, 3, 0, "final", 0)

#: Version of the tab-separated report layout written by the experiments
SCHEMA_VERSION = "1"
