# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import datetime
import logging

from django.core.management.base import BaseCommand, CommandError

from dynamo.core.exceptions import ConfigError, DynamoError

from ...config import parse_config
from ...experiments import run


logger = logging.getLogger(__name__)


class ExperimentCommand(BaseCommand):
    """Base class for experiment subcommands.

    Config problems exit with status 2, any other failure of the
    experiment with status 1.
    """

    experiment = None

    def add_arguments(self, parser):
        parser.add_argument(
            "--config", required=True, help="Experiment configuration file",
        )
        parser.add_argument(
            "--out", default=None, help="Write the report here instead of stdout",
        )
        parser.add_argument(
            "--budget",
            type=int,
            default=None,
            help="Cap on points visited by any enumeration",
        )
        parser.add_argument(
            "--override-restricted",
            action="store_true",
            default=False,
            help="Treat the map as a restricted lift of p-th power",
        )

    def read_config(self, path):
        try:
            with open(path, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise CommandError("Cannot read %s: %s" % (path, e), returncode=2)

        try:
            return parse_config(text)
        except ConfigError as e:
            raise CommandError("Invalid config %s: %s" % (path, e), returncode=2)

    def handle(self, **options):
        # adjust debug level to the verbosity option
        debug_levels = {
            0: logging.ERROR,
            1: logging.WARNING,
            2: logging.INFO,
            3: logging.DEBUG,
        }
        logging.getLogger("dynamo").setLevel(
            debug_levels.get(options["verbosity"], logging.DEBUG)
        )

        if options["budget"] is not None and options["budget"] < 1:
            raise CommandError("--budget must be positive", returncode=2)

        config = self.read_config(options["config"])

        start = datetime.datetime.now()
        logger.info("Start running of %s", self.experiment)

        try:
            reporter = run(
                self.experiment,
                config,
                budget=options["budget"],
                override_restricted=options["override_restricted"],
            )
        except ConfigError as e:
            raise CommandError(str(e), returncode=2)
        except DynamoError as e:
            raise CommandError(str(e), returncode=1)

        if options["out"]:
            reporter.generate(filepath=options["out"])
        else:
            reporter.generate(stream=self.stdout)

        end = datetime.datetime.now()
        logger.info("All done for %s in %s", self.experiment, end - start)
