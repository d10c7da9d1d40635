# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""The rank-2 valuation with values in ``R_{>0} x gamma^Z``.

``gamma`` is infinitesimally below 1, so values compare by magnitude first
and then by the exponent of ``gamma``. Magnitudes are kept as valuations,
hence the reversed first comparison.
"""

import functools
import math
from dataclasses import dataclass
from typing import Union

from .gauss import gauss_norm


@functools.total_ordering
@dataclass(frozen=True, eq=True, order=False)
class GammaValue:
    r: Union[int, float]
    g: int = 0

    def __str__(self):
        if self.is_bottom():
            return "0"
        return "(%s, gamma^%d)" % (self.r, self.g)

    @classmethod
    def bottom(cls):
        """The value of 0, below every other value."""
        return cls(math.inf, 0)

    def is_bottom(self):
        return self.r == math.inf

    def __lt__(self, other):
        if not isinstance(other, GammaValue):
            return NotImplemented
        if self.is_bottom() or other.is_bottom():
            return self.is_bottom() and not other.is_bottom()
        if self.r != other.r:
            return self.r > other.r
        return self.g < other.g

    def __add__(self, other):
        """The product of the two values, written additively."""
        if not isinstance(other, GammaValue):
            return NotImplemented
        if self.is_bottom() or other.is_bottom():
            return GammaValue.bottom()
        return GammaValue(self.r + other.r, self.g + other.g)


def rank2_val(f):
    """``(gauss_norm(f), i0)`` with ``i0`` the largest exponent whose
    coefficient attains the Gauss norm.
    """
    if f.nvars != 1:
        raise ValueError("rank2_val is defined on univariate polynomials")
    if f.is_zero():
        return GammaValue.bottom()

    norm = gauss_norm(f)
    top = max(exponents[0] for exponents, coeff in f.terms if coeff.val() == norm)
    return GammaValue(norm, top)


def gamma_compare(a, b):
    """-1, 0 or 1 as ``a`` is below, equal to or above ``b``."""
    if a == b:
        return 0
    return -1 if a < b else 1
