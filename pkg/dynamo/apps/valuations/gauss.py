# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Gauss norms of Tate algebra elements.

Series are represented by polynomials; a tail below working precision is
invisible anyway. Norms are reported as valuations: ``|f| = p^-v``.
"""

import math

from dynamo.apps.dynamics.polynomials import Polynomial
from dynamo.core.exceptions import ZeroPolynomial


TatePoly = Polynomial


def gauss_norm(f):
    """Minimum coefficient valuation, ``inf`` for the zero polynomial."""
    if f.is_zero():
        return math.inf
    return min(coeff.val() for coeff in f.coefficients())


def normalize_generator(f):
    """``f / p^gauss_norm(f)``, a polynomial of Gauss norm 1."""
    norm = gauss_norm(f)
    if norm == math.inf:
        raise ZeroPolynomial("The zero polynomial cannot be normalized")
    if not norm:
        return f
    return Polynomial(
        f.zero, f.nvars, tuple((e, c.divide_by_p(norm)) for e, c in f.terms)
    )
