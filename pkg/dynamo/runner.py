#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""The ``padic-dynamo`` console script.

``padic-dynamo tate-voloch --config exp.conf`` runs the ``tate_voloch``
management command; every other argument is passed to Django unchanged.
"""

import os
import sys
from argparse import ArgumentParser

from django.core import management


#: The module that ``DJANGO_SETTINGS_MODULE`` will be set to
DJANGO_SETTINGS_MODULE = "dynamo.settings"


def command_name(subcommand):
    """Experiment subcommands are spelled with dashes on the command line
    and with underscores as management commands.
    """
    return subcommand.replace("-", "_")


def configure_app(settings_path=None):
    """Sets the environment variables the settings module reads.

    :param settings_path: Optional file with local setting overrides.
    """
    if settings_path:
        settings_path = os.path.normpath(
            os.path.abspath(os.path.expanduser(settings_path))
        )
        if not os.path.exists(settings_path):
            sys.stderr.write("Settings file does not exist at %r\n" % settings_path)
            sys.exit(2)
        os.environ["DYNAMO_SETTINGS"] = settings_path
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", DJANGO_SETTINGS_MODULE)


def run_app(argv=None):
    """Wrapper around django-admin.py."""
    argv = sys.argv if argv is None else argv
    runner_name = os.path.basename(argv[0])

    # This parser should ignore the --help flag, unless there is no subcommand
    parser = ArgumentParser(add_help=False)
    parser.add_argument("--version", action="version", version=get_version())
    parser.add_argument(
        "--settings-file",
        default=None,
        help="Read local setting overrides from this file.",
    )
    args, remainder = parser.parse_known_args(argv[1:])

    configure_app(args.settings_file)

    if remainder and not remainder[0].startswith("-"):
        remainder[0] = command_name(remainder[0])

    management.execute_from_command_line([runner_name] + remainder)


def get_version():
    from dynamo import __version__

    return __version__


def main():
    run_app()


if __name__ == "__main__":
    main()
