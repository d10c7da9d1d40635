# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Experiment configuration files.

One ``key = value`` pair per line; blank lines and lines starting with
``#`` are ignored. ``map`` and ``variety`` repeat, one line per component
or generator, every other key appears at most once. Example::

    p = 2
    k = 1
    N = 8
    dim = 1
    map = X0^2 + 2*X0
    variety = X0
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Tuple

from sympy import isprime

from dynamo.apps.dynamics.grammar import (
    parse_polynomial,
    parse_residue_point,
)
from dynamo.apps.dynamics.maps import PolyMap
from dynamo.apps.dynamics.variety import VarietySpec
from dynamo.apps.padic.rings import PAdicContext
from dynamo.core.exceptions import ConfigError, DynamoError
from dynamo.core.utils.conf import get_setting


REPEATABLE = ("map", "variety")

LINE_RE = re.compile(r"^(?P<key>[A-Za-z_][A-Za-z0-9_]*)\s*=\s*(?P<value>.*)$")
RANGE_RE = re.compile(r"^(?P<start>\d+)\s*\.\.\s*(?P<end>\d+)$")


@dataclass(frozen=True)
class ExperimentConfig:
    p: int
    k: int = 1
    N: int = 16
    dim: int = 1
    maps: Tuple[str, ...] = ()
    varieties: Tuple[str, ...] = ()
    degrees: Tuple[int, ...] = ()
    max_period: int = 6
    depth: int = 8
    lookahead: int = 2
    degree_bound: int = 2
    seed: int = 0
    invariance_power: int = 1
    n_max: int = 4
    point: Optional[str] = None
    modulus: Optional[Tuple[int, ...]] = None

    @cached_property
    def context(self):
        return PAdicContext(self.p, self.k, self.N, self.modulus)

    def build_map(self):
        return PolyMap.from_text(self.context, self.maps)

    def build_variety(self):
        return VarietySpec.from_text(self.context, self.varieties, self.dim)

    def variety_polynomials(self):
        """The generators as written, before normalization."""
        return [
            parse_polynomial(self.context, text, self.dim) for text in self.varieties
        ]

    def base_point(self):
        if self.point is None:
            return None
        return parse_residue_point(self.context, self.point)


# Keys in file order, with the dataclass field each one fills.
KEYS = (
    ("p", "p"),
    ("k", "k"),
    ("N", "N"),
    ("modulus", "modulus"),
    ("dim", "dim"),
    ("map", "maps"),
    ("variety", "varieties"),
    ("degrees", "degrees"),
    ("max_period", "max_period"),
    ("depth", "depth"),
    ("lookahead", "lookahead"),
    ("degree_bound", "degree_bound"),
    ("invariance_power", "invariance_power"),
    ("n_max", "n_max"),
    ("seed", "seed"),
    ("point", "point"),
)

# Lower bounds of the integer keys.
MINIMUMS = {
    "k": 1,
    "N": 1,
    "dim": 1,
    "max_period": 1,
    "depth": 0,
    "lookahead": 0,
    "degree_bound": 1,
    "invariance_power": 1,
    "n_max": 0,
    "seed": 0,
}


def split_lines(text):
    """Returns ``{key: [values]}``; stops at the first malformed line."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        match = LINE_RE.match(line)
        if match is None:
            raise ConfigError("expected 'key = value', got '%s'" % line, lineno=lineno)
        values.setdefault(match.group("key"), []).append(match.group("value").strip())
    return values


def parse_int(key, value, errors):
    try:
        return int(value)
    except ValueError:
        errors.append("%s = %s is not an integer" % (key, value))
        return None


def parse_degrees(value, errors):
    """``1,2,3``, ``1..5`` or a mix of both."""
    degrees = set()
    for part in value.split(","):
        part = part.strip()
        match = RANGE_RE.match(part)
        if match:
            start, end = int(match.group("start")), int(match.group("end"))
            if start > end:
                errors.append("degrees range %s is empty" % part)
            degrees.update(range(start, end + 1))
        elif part.isdigit():
            degrees.add(int(part))
        else:
            errors.append("degrees entry '%s' is not an integer or a..b range" % part)
    return tuple(sorted(degrees))


def parse_config(text):
    """Parses and validates an experiment configuration.

    Raises ``ConfigError`` listing every problem found; syntax errors stop
    at the offending line and carry its number.
    """
    values = split_lines(text)
    errors = []

    known = {key for key, _ in KEYS}
    for key in sorted(values):
        if key not in known:
            errors.append("unknown key '%s'" % key)
        elif key not in REPEATABLE and len(values[key]) > 1:
            errors.append("'%s' is given %d times" % (key, len(values[key])))

    def single(key):
        entries = values.get(key)
        return entries[-1] if entries else None

    options = {}
    if single("p") is None:
        errors.append("p is required")
    for key in ("p",) + tuple(MINIMUMS):
        raw = single(key)
        if raw is None:
            continue
        number = parse_int(key, raw, errors)
        if number is None:
            continue
        if key in MINIMUMS and number < MINIMUMS[key]:
            errors.append("%s = %d must be >= %d" % (key, number, MINIMUMS[key]))
        else:
            options[key] = number

    if "p" in options and not isprime(options["p"]):
        errors.append("p = %d is not prime" % options["p"])

    options.setdefault("N", get_setting("DYNAMO_DEFAULT_PRECISION"))
    options.setdefault("depth", get_setting("DYNAMO_BACKWARD_DEPTH"))
    options.setdefault("lookahead", get_setting("DYNAMO_BACKWARD_LOOKAHEAD"))

    maps = tuple(values.get("map", ()))
    if not maps:
        errors.append("at least one 'map' line is required")
    options["maps"] = maps
    options["varieties"] = tuple(values.get("variety", ()))
    options.setdefault("dim", len(maps) or 1)
    if maps and len(maps) != options["dim"]:
        errors.append(
            "dim = %d but %d map components are given" % (options["dim"], len(maps))
        )

    if single("modulus") is not None:
        coeffs = [
            parse_int("modulus", c.strip(), errors)
            for c in single("modulus").split(",")
        ]
        if None not in coeffs:
            options["modulus"] = tuple(coeffs)

    k = options.get("k", 1)
    if single("degrees") is not None:
        degrees = parse_degrees(single("degrees"), errors)
        if 0 in degrees:
            errors.append("degrees must be >= 1")
        bad = [d for d in degrees if d and d % k]
        if bad:
            errors.append(
                "degrees %s are not multiples of k = %d"
                % (", ".join(str(d) for d in bad), k)
            )
        options["degrees"] = degrees
    else:
        options["degrees"] = (k,)

    if single("point") is not None:
        options["point"] = single("point")

    if errors or "p" not in options:
        raise ConfigError(errors)

    config = ExperimentConfig(**options)
    validate_polynomials(config, errors)
    if errors:
        raise ConfigError(errors)
    return config


def validate_polynomials(config, errors):
    """Builds the context and parses every polynomial text, collecting
    the failures.
    """
    try:
        config.context
    except DynamoError as e:
        errors.append(str(e))
        return

    for text in config.maps:
        try:
            parse_polynomial(config.context, text, config.dim)
        except DynamoError as e:
            errors.append("map: %s" % e)
    for text in config.varieties:
        try:
            parse_polynomial(config.context, text, config.dim)
        except DynamoError as e:
            errors.append("variety: %s" % e)
    if not errors:
        try:
            config.build_variety()
        except DynamoError as e:
            errors.append("variety: %s" % e)

    if config.point is not None:
        try:
            point = config.base_point()
        except DynamoError as e:
            errors.append("point: %s" % e)
        else:
            if len(point) != config.dim:
                errors.append(
                    "point has %d coordinates, dim = %d" % (len(point), config.dim)
                )


def render_value(value):
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    return str(value)


def render_config(config):
    """The text form of ``config``; ``parse_config`` reads it back to an
    equal config.
    """
    lines = []
    for key, name in KEYS:
        value = getattr(config, name)
        if value is None:
            continue
        if key in REPEATABLE:
            lines.extend("%s = %s" % (key, text) for text in value)
        else:
            lines.append("%s = %s" % (key, render_value(value)))
    return "\n".join(lines) + "\n"
