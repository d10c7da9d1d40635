# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import itertools

import pytest

from dynamo.apps.padic.extensions import embed, generator_image
from dynamo.apps.padic.rings import PAdicContext, horner, residue_field_elements
from dynamo.core.exceptions import ContextMismatch


def test_generator_image_is_a_root(z4):
    target = z4.with_degree(4)
    theta = generator_image(z4, target)
    assert horner(z4.modulus, theta).is_zero()


def test_generator_image_same_field(z4):
    assert generator_image(z4, z4.with_precision(16)) == z4.with_precision(16).generator


def test_generator_image_mismatch(z4):
    with pytest.raises(ContextMismatch):
        generator_image(z4, z4.with_degree(3))
    with pytest.raises(ContextMismatch):
        generator_image(z4, PAdicContext(3, 2, 8))


def test_embed_is_a_ring_homomorphism(z4):
    target = z4.with_degree(4)
    values = [z4.element(c) for c in itertools.product((0, 1, 3, 6), repeat=2)]
    for a, b in itertools.product(values, repeat=2):
        assert embed(a + b, target) == embed(a, target) + embed(b, target)
        assert embed(a * b, target) == embed(a, target) * embed(b, target)


def test_embed_residues(z4):
    target = z4.with_degree(4)
    images = [embed(r, target) for r in residue_field_elements(z4)]
    assert len(set(images)) == 4
    for r, image in zip(residue_field_elements(z4), images):
        assert image.frobenius().frobenius() == image
        assert embed(r.lift(), target).reduce() == image


def test_embed_integers(z2):
    target = z2.with_degree(3)
    assert embed(z2.element(200), target) == target.element(200)
    assert embed(z2.residue(1), target) == target.residue(1)


def test_embed_rejects_other_values(z2):
    with pytest.raises(TypeError):
        embed(3, z2)
