# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

from dynamo.apps.dynamics.polynomials import Polynomial


def random_polynomial(rng, ctx, nvars=1, max_degree=4, max_val=3):
    """Random polynomial in ``X0`` with coefficient valuations at most
    ``max_val``.
    """
    terms = []
    for degree in range(rng.randint(0, max_degree) + 1):
        unit = rng.randrange(1, ctx.p) + ctx.p * rng.randrange(ctx.order)
        coeff = ctx.element(unit * ctx.p ** rng.randint(0, max_val))
        terms.append(((degree,) + (0,) * (nvars - 1), coeff))
    return Polynomial(ctx.zero, nvars, tuple(terms))
