# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Django settings for padic-dynamo.

Every ``settings/*.conf`` file is executed in name order, followed by the
file named in ``DYNAMO_SETTINGS`` when that variable is set. Later files
override earlier ones.
"""

import glob
import os


SETTINGS_DIR = os.path.join(os.path.abspath(os.path.dirname(__file__)), "settings")


def settings_files(override=None):
    files = sorted(glob.glob(os.path.join(SETTINGS_DIR, "*.conf")))
    if override:
        files.append(os.path.abspath(os.path.expanduser(override)))
    return files


for _path in settings_files(os.environ.get("DYNAMO_SETTINGS")):
    with open(_path, encoding="utf-8") as _conf:
        exec(compile(_conf.read(), _path, "exec"))
