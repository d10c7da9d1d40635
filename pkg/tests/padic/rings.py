# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import itertools
import random

import pytest
from sympy import primerange

from dynamo.apps.padic.rings import (
    PAdicContext,
    horner,
    residue_field_elements,
    smallest_irreducible,
)
from dynamo.core.exceptions import ContextMismatch, InvalidContext, NotAUnit


def test_context_defaults():
    ctx = PAdicContext(2, 2, 4)
    assert ctx.modulus == (1, 1, 1)
    assert ctx.order == 16
    assert ctx.q == 4
    assert ctx.describe() == (2, 2, (1, 1, 1), 4)
    assert PAdicContext.for_degree(2, 2, 4) == ctx


@pytest.mark.parametrize(
    "p, k, expected",
    [
        (2, 1, (0, 1)),
        (2, 2, (1, 1, 1)),
        (2, 3, (1, 1, 0, 1)),
        (3, 2, (1, 0, 1)),
        (3, 3, (1, 0, 2, 1)),
        (5, 1, (0, 1)),
    ],
)
def test_smallest_irreducible(p, k, expected):
    assert smallest_irreducible(p, k) == expected


@pytest.mark.parametrize(
    "kwargs, message",
    [
        (dict(p=4), "p = 4 is not prime"),
        (dict(p=1), "p = 1 is not prime"),
        (dict(p=2, k=0), "extension degree k = 0"),
        (dict(p=2, precision=0), "precision N = 0"),
        (dict(p=2, k=2, modulus=(1, 0, 1)), "is reducible mod 2"),
        (dict(p=2, k=2, modulus=(1, 1, 2)), "is not monic of degree 2"),
    ],
)
def test_context_invalid(kwargs, message):
    with pytest.raises(InvalidContext) as e:
        PAdicContext(**kwargs)
    assert message in str(e.value)


def test_add(z2):
    assert z2.element(200) + z2.element(100) == z2.element(44)
    a = z2.element(77)
    assert a + z2.zero == a
    assert (a + (-a)).is_zero()
    assert 3 + a == z2.element(80)
    assert (a - 78).coeffs == (255,)


def test_mul(z2):
    assert z2.element(3) * z2.element(5) == z2.element(15)
    a = z2.element(77)
    assert a * z2.one == a


def test_mul_extension():
    ctx = PAdicContext(2, 2, 4)
    w = ctx.generator
    # w^2 = -w - 1
    assert (w * w).coeffs == (15, 15)
    assert w * w + w + 1 == ctx.zero


@pytest.mark.parametrize("value, expected", [(12, 2), (0, 8), (7, 0), (128, 7)])
def test_val(z2, value, expected):
    assert z2.element(value).val() == expected


def test_invert():
    ctx = PAdicContext(2, 1, 4)
    assert ctx.element(3).invert() == ctx.element(11)
    assert ctx.one.invert() == ctx.one
    with pytest.raises(NotAUnit):
        ctx.element(2).invert()


def test_invert_every_unit(z2):
    for value in range(1, z2.order, 2):
        a = z2.element(value)
        assert a * a.invert() == z2.one
        assert a ** -1 == a.invert()


def test_invert_extension(z4):
    for x, y in itertools.product(range(4), repeat=2):
        a = z4.element((2 * x + 1, 2 * y))
        assert a * a.invert() == z4.one


def test_mixed_contexts(z2, z3):
    with pytest.raises(ContextMismatch):
        z2.element(1) + z3.element(1)
    with pytest.raises(ContextMismatch):
        z2.residue(1) * z3.residue(1)
    with pytest.raises(ContextMismatch):
        z2.element(z3.one)


def test_reduce(z2):
    assert z2.element(5).reduce() == z2.residue(1)
    assert z2.zero.reduce().is_zero()
    ctx = PAdicContext(2, 2, 4)
    assert ctx.element((3, 6)).reduce().coeffs == (1, 0)


def test_lift(z3, z4):
    assert z3.residue(2).lift() == z3.element(2)
    assert z3.residue(0).lift().is_zero()
    assert z4.residue((1, 1)).lift().coeffs == (1, 1)
    for r in residue_field_elements(z4):
        assert r.lift().reduce() == r


def test_residue_equality_ignores_precision(z2):
    other = z2.with_precision(32)
    assert z2.residue(1) == other.residue(1)
    assert len({z2.residue(1), other.residue(1)}) == 1


def test_residue_str(z4):
    w = z4.residue((0, 1))
    assert str(w) == "w"
    assert str(w + 1) == "w+1"
    assert str(w - w) == "0"
    assert str(PAdicContext(3, 2, 4).residue((2, 2))) == "2*w+2"


def test_frobenius(z4):
    w = z4.residue((0, 1))
    assert w.frobenius() == w + 1
    assert z4.residue(1).frobenius() == z4.residue(1)
    assert z4.residue(0).frobenius() == z4.residue(0)


def test_pth_root(z4):
    w = z4.residue((0, 1))
    assert w.pth_root() == w + 1
    assert (w + 1) ** 2 == w
    assert z4.residue(1).pth_root() == z4.residue(1)
    assert z4.residue(0).pth_root() == z4.residue(0)


@pytest.mark.parametrize("p, k", [(2, 2), (2, 3), (3, 2), (5, 1)])
def test_residue_field_axioms(p, k):
    ctx = PAdicContext(p, k, 4)
    elements = residue_field_elements(ctx)
    assert len(elements) == ctx.q
    assert len(set(elements)) == ctx.q
    one = ctx.residue(1)
    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b).frobenius() == a.frobenius() + b.frobenius()
        assert (a * b).frobenius() == a.frobenius() * b.frobenius()
        for c in elements[:3]:
            assert a * (b + c) == a * b + a * c
    for a in elements:
        assert a.pth_root() ** p == a
        x = a
        for _ in range(k):
            x = x.frobenius()
        assert x == a
        if not a.is_zero():
            assert a * a.invert() == one


def test_residue_zero_has_no_inverse(z4):
    with pytest.raises(NotAUnit):
        z4.residue(0).invert()


def test_teichmuller(z4):
    w = z4.residue((0, 1))
    t = w.teichmuller()
    assert t.reduce() == w
    assert t ** 3 == z4.one
    assert t != z4.one
    # a root of w^2 + w + 1
    assert t * t + t + 1 == z4.zero
    assert z4.residue(0).teichmuller().is_zero()
    assert z4.residue(1).teichmuller() == z4.one


def test_divide_by_p(z2):
    assert z2.element(12).divide_by_p(2) == z2.element(3)
    with pytest.raises(NotAUnit):
        z2.element(12).divide_by_p(3)


def test_horner(z2):
    assert horner((1, 0, 1), z2.element(3)) == z2.element(10)
    assert horner((), z2.element(3)).is_zero()


def test_from_generator_poly():
    ctx = PAdicContext(2, 2, 4)
    # w^3 = 1
    assert ctx.from_generator_poly((0, 0, 0, 1)) == ctx.one
    assert ctx.residue_from_generator_poly((1, 0, 1)) == ctx.residue((0, 1))


def random_elements(context, count, seed):
    """Seeded elements of every valuation from 0 to ``N``."""
    rng = random.Random(seed)
    elements = []
    for _ in range(count):
        shift = context.p ** rng.randint(0, context.precision)
        coeffs = [rng.randrange(context.order) for _ in range(context.k)]
        elements.append(context.element(coeffs) * shift)
    return elements


RING_CONTEXTS = [(2, 1, 8), (3, 2, 6), (5, 1, 4), (2, 3, 10)]


@pytest.mark.parametrize("p, k, precision", RING_CONTEXTS)
def test_ring_axioms(p, k, precision):
    ctx = PAdicContext(p, k, precision)
    elements = random_elements(ctx, 60, seed=p * k)
    for a, b, c in zip(elements, elements[1:], elements[2:]):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == ctx.zero


@pytest.mark.parametrize("p, k, precision", RING_CONTEXTS)
def test_val_of_products_and_sums(p, k, precision):
    ctx = PAdicContext(p, k, precision)
    elements = random_elements(ctx, 200, seed=p + k)
    for a, b in zip(elements, elements[1:]):
        assert (a * b).val() == min(a.val() + b.val(), precision)
        assert (a + b).val() >= min(a.val(), b.val())
        if a.val() != b.val():
            assert (a + b).val() == min(a.val(), b.val())


@pytest.mark.parametrize("p, k, precision", RING_CONTEXTS)
def test_reduce_is_a_ring_homomorphism(p, k, precision):
    ctx = PAdicContext(p, k, precision)
    elements = random_elements(ctx, 200, seed=p * 7 + k)
    assert ctx.one.reduce() == ctx.residue(1)
    for a, b in zip(elements, elements[1:]):
        assert (a + b).reduce() == a.reduce() + b.reduce()
        assert (a * b).reduce() == a.reduce() * b.reduce()
        assert (-a).reduce() == -a.reduce()


SMALL_FIELDS = [(p, k) for p in primerange(2, 82) for k in range(1, 7) if p ** k <= 81]


@pytest.mark.parametrize("p, k", SMALL_FIELDS)
def test_frobenius_is_a_bijection(p, k):
    ctx = PAdicContext(p, k, 2)
    elements = residue_field_elements(ctx)
    images = {a.frobenius() for a in elements}
    assert len(images) == ctx.q
    for a in elements:
        assert a.frobenius().pth_root() == a
        assert a.pth_root().frobenius() == a
