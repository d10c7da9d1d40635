# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

from dynamo.constants import VERSION
from dynamo.core.utils.version import get_version


__version__ = get_version(VERSION)
