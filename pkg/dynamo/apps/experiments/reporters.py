# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import codecs
import logging

from dynamo.constants import SCHEMA_VERSION

from .config import render_config


logger = logging.getLogger(__name__)


class BaseReporter(object):
    def __init__(self, kind, config):
        self.kind = kind
        self.config = config
        self.columns = []
        self.rows = []
        self.summary = []

    def add(self, *row):
        self.rows.append(tuple(row))

    def add_summary(self, key, value):
        self.summary.append((key, value))

    def generate(self, **kwargs):
        raise NotImplementedError


def format_cell(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


class TSVReporter(BaseReporter):
    """Reports as text: a ``# padic-dynamo <schema> <kind>`` header, the
    config echoed as comments, a tab separated table and a summary line.

    Rows are written in the order they were added; producers add them in
    canonical order so identical configs give byte-identical reports.
    """

    def get_data(self):
        lines = ["# padic-dynamo %s %s" % (SCHEMA_VERSION, self.kind)]
        lines.extend(
            "# %s" % line for line in render_config(self.config).splitlines()
        )
        lines.append("\t".join(self.columns))
        lines.extend(
            "\t".join(format_cell(value) for value in row) for row in self.rows
        )
        lines.append(
            "# summary: %s"
            % "; ".join(
                "%s = %s" % (key, format_cell(value)) for key, value in self.summary
            )
        )
        return "\n".join(lines) + "\n"

    def generate(self, filepath=None, stream=None, **kwargs):
        """Writes the report to ``filepath`` or ``stream``."""
        report = self.get_data()
        if filepath is not None:
            with codecs.open(filepath, "w", "utf-8") as f:
                f.write(report)
            logger.info("Report written to %s", filepath)
        elif stream is not None:
            stream.write(report)
        return report
