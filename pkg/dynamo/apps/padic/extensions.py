# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Embeddings ``Z_q -> Z_q'`` between unramified extensions.

Scans run the same map over ``F_{p^m}`` for several ``m``; coefficients
written in the generator ``w`` of the configured context are carried over
by sending ``w`` to a root of its modulus in the larger ring.
"""

import logging
from functools import lru_cache

from dynamo.core.exceptions import ContextMismatch

from .rings import PAdicElement, ResidueElement, horner


logger = logging.getLogger(__name__)


def _derivative(coeffs):
    return tuple(i * c for i, c in enumerate(coeffs))[1:]


@lru_cache(maxsize=None)
def generator_image(source, target):
    """Returns the image of ``source``'s generator in ``target``.

    The residue root is the first root of the modulus in canonical order;
    Newton's iteration lifts it to full precision (the modulus is
    separable, so its derivative is a unit at the root).
    """
    if source.p != target.p or target.k % source.k:
        raise ContextMismatch("Cannot embed %s into %s" % (source, target))

    if source.residue_field == target.residue_field:
        return target.generator

    modulus = source.modulus
    for candidate in target.residue_elements():
        if horner(modulus, candidate).is_zero():
            break
    else:
        raise ContextMismatch("%s has no root in %s" % (modulus, target))

    theta = candidate.lift()
    derivative = _derivative(modulus)
    for _ in range(target.precision.bit_length() + 1):
        value = horner(modulus, theta)
        if value.is_zero():
            break
        theta = theta - value * horner(derivative, theta).invert()

    logger.debug("Embedding %s -> %s sends w to %s", source, target, theta)
    return theta


def embed(value, target):
    """Maps a p-adic or residue element into the ring of ``target``."""
    if not isinstance(value, (PAdicElement, ResidueElement)):
        raise TypeError("Cannot embed %r" % (value,))

    source = value.context
    if isinstance(value, ResidueElement):
        if source.residue_field == target.residue_field:
            return target.residue(value.coeffs)
        theta = generator_image(source, target).reduce()
        return horner(value.coeffs, theta)

    if source == target:
        return value
    if source.residue_field == target.residue_field:
        return PAdicElement(target, value.coeffs)
    theta = generator_image(source.with_precision(target.precision), target)
    return horner(value.coeffs, theta)
