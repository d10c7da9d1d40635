# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

from dataclasses import dataclass
from typing import Tuple

from dynamo.apps.valuations.gauss import normalize_generator
from dynamo.core.exceptions import ContextMismatch

from .grammar import parse_polynomial
from .polynomials import Polynomial


@dataclass(frozen=True)
class VarietySpec:
    """The affine variety ``H_1 = ... = H_m = 0``.

    Generators are normalized to Gauss norm 1 on construction. An empty
    generator list is the whole space.
    """

    generators: Tuple[Polynomial, ...]
    nvars: int

    def __post_init__(self):
        generators = tuple(normalize_generator(h) for h in self.generators)
        for h in generators:
            if h.is_residue or h.nvars != self.nvars:
                raise ContextMismatch(
                    "Generator %s is not a p-adic polynomial in %d variables"
                    % (h, self.nvars)
                )
            if h.context != generators[0].context:
                raise ContextMismatch("Generators of a variety share one context")
        object.__setattr__(self, "generators", generators)

    def __str__(self):
        return "{%s}" % ", ".join("%s = 0" % h for h in self.generators)

    @classmethod
    def from_text(cls, context, texts, nvars):
        generators = tuple(parse_polynomial(context, text, nvars) for text in texts)
        return cls(generators, nvars)

    def reduce(self):
        """Generators of the reduced variety; none of them is zero."""
        return tuple(h.reduce() for h in self.generators)

    def base_change(self, target):
        return VarietySpec(
            tuple(h.base_change(target) for h in self.generators), self.nvars
        )


def contains_residue(reduced_generators, point):
    return all(h.evaluate(point).is_zero() for h in reduced_generators)


def gauss_distance(x, V):
    """``v`` with ``d(x, V) = p^-v``; ``N`` means on ``V`` at precision."""
    return min(
        (h.evaluate(x).val() for h in V.generators), default=x[0].context.precision
    )
