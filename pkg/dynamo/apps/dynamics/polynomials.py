# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

from dataclasses import dataclass
from typing import Tuple, Union

from dynamo.apps.padic.extensions import embed
from dynamo.apps.padic.rings import PAdicElement, ResidueElement
from dynamo.core.exceptions import ContextMismatch


Coefficient = Union[PAdicElement, ResidueElement]
Monomial = Tuple[int, ...]


def _term_order(term):
    exponents, _ = term
    return (-sum(exponents), tuple(-e for e in exponents))


def render_monomial(exponents):
    factors = []
    for index, exponent in enumerate(exponents):
        if exponent == 1:
            factors.append("X%d" % index)
        elif exponent > 1:
            factors.append("X%d^%d" % (index, exponent))
    return "*".join(factors)


def render_point(point):
    return "(%s)" % ", ".join(str(coordinate) for coordinate in point)


def point_key(point):
    """Canonical ordering key of a point: its coordinates' coefficient
    vectors, compared as integer tuples.
    """
    return tuple(coordinate.coeffs for coordinate in point)


def reduce_point(point):
    return tuple(coordinate.reduce() for coordinate in point)


@dataclass(frozen=True)
class Polynomial:
    """A sparse polynomial in ``X0, ..., X{nvars-1}``.

    ``zero`` is the zero of the coefficient ring: a ``PAdicElement`` for
    polynomials over ``Z_q``, a ``ResidueElement`` over ``F_q``. Terms with
    equal exponents are merged and terms vanishing at working precision are
    dropped, so exponent vectors are pairwise distinct.
    """

    zero: Coefficient
    nvars: int
    terms: Tuple[Tuple[Monomial, Coefficient], ...] = ()

    def __post_init__(self):
        merged = {}
        for exponents, coeff in self.terms:
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != self.nvars or min(exponents, default=0) < 0:
                raise ValueError(
                    "Exponent vector %s does not fit %d variables"
                    % (exponents, self.nvars)
                )
            merged[exponents] = merged.get(exponents, self.zero) + coeff

        terms = sorted(
            ((e, c) for e, c in merged.items() if not c.is_zero()), key=_term_order
        )
        object.__setattr__(self, "terms", tuple(terms))

    def __str__(self):
        if not self.terms:
            return "0"

        rendered = []
        for exponents, coeff in self.terms:
            monomial = render_monomial(exponents)
            text = str(coeff)
            if "+" in text:
                text = "(%s)" % text
            if not monomial:
                rendered.append(text)
            elif text == "1":
                rendered.append(monomial)
            else:
                rendered.append("%s*%s" % (text, monomial))
        return " + ".join(rendered)

    @property
    def context(self):
        return self.zero.context

    @property
    def is_residue(self):
        return isinstance(self.zero, ResidueElement)

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(exponents) for exponents, _ in self.terms), default=-1)

    def is_zero(self):
        return not self.terms

    def coefficients(self):
        return [coeff for _, coeff in self.terms]

    def _new(self, terms, zero=None):
        return Polynomial(self.zero if zero is None else zero, self.nvars, tuple(terms))

    def _check_compatible(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.nvars != self.nvars or type(other.zero) is not type(self.zero):
            raise ContextMismatch("Cannot combine %s and %s" % (self, other))
        return other

    def __add__(self, other):
        other = self._check_compatible(other)
        if other is NotImplemented:
            return NotImplemented
        return self._new(self.terms + other.terms)

    def __neg__(self):
        return self._new((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        other = self._check_compatible(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, PAdicElement, ResidueElement)):
            return self._new((e, c * other) for e, c in self.terms)
        other = self._check_compatible(other)
        if other is NotImplemented:
            return NotImplemented
        return self._new(
            (tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
            for e1, c1 in self.terms
            for e2, c2 in other.terms
        )

    __rmul__ = __mul__

    def __pow__(self, exponent):
        result = self._new([((0,) * self.nvars, self.zero + 1)])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ContextMismatch(
                "Point of dimension %d given to a polynomial in %d variables"
                % (len(point), self.nvars)
            )
        powers = [{} for _ in point]
        total = self.zero
        for exponents, coeff in self.terms:
            value = coeff
            for index, exponent in enumerate(exponents):
                if not exponent:
                    continue
                cache = powers[index]
                if exponent not in cache:
                    cache[exponent] = point[index] ** exponent
                value = value * cache[exponent]
            total = total + value
        return total

    __call__ = evaluate

    def reduce(self):
        """Coefficient-wise reduction; terms divisible by ``p`` vanish."""
        return self._new(((e, c.reduce()) for e, c in self.terms), self.zero.reduce())

    def base_change(self, target):
        """The same polynomial with coefficients embedded in ``target``."""
        if self.is_residue:
            if self.context.residue_field == target.residue_field:
                return self
            zero = target.residue(0)
        else:
            if self.context == target:
                return self
            zero = target.zero
        return self._new(((e, embed(c, target)) for e, c in self.terms), zero)
