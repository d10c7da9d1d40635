# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from dynamo.core.exceptions import ContextMismatch, NotALift

from .grammar import parse_polynomial, parse_residue_polynomial
from .polynomials import Polynomial, render_monomial


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolynomialMap:
    """An endomorphism ``(F_1, ..., F_n)`` of affine ``n``-space."""

    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        components = tuple(self.components)
        if not components:
            raise ValueError("A map needs at least one component")
        dimension = len(components)
        for component in components:
            if component.nvars != dimension:
                raise ContextMismatch(
                    "Component %s has %d variables, the map has dimension %d"
                    % (component, component.nvars, dimension)
                )
            if component.zero != components[0].zero:
                raise ContextMismatch("Components of a map share one context")
        object.__setattr__(self, "components", components)

    def __str__(self):
        return "(%s)" % ", ".join(str(component) for component in self.components)

    @property
    def dimension(self):
        return len(self.components)

    @property
    def context(self):
        return self.components[0].context

    @property
    def degrees(self):
        return tuple(component.degree for component in self.components)

    def __call__(self, point):
        if len(point) != self.dimension:
            raise ContextMismatch(
                "Point %s does not have dimension %d" % (point, self.dimension)
            )
        return tuple(component.evaluate(point) for component in self.components)

    def iterate(self, point, n):
        for _ in range(n):
            point = self(point)
        return point

    def base_change(self, target):
        return type(self)(
            tuple(component.base_change(target) for component in self.components)
        )


class PolyMap(PolynomialMap):
    """A map with coefficients in ``Z_q``.

    Coefficients are integral by construction: every ``PAdicElement`` is a
    residue class modulo ``p^N``.
    """

    def __post_init__(self):
        super().__post_init__()
        if any(component.is_residue for component in self.components):
            raise ContextMismatch("PolyMap coefficients must be p-adic")

    @classmethod
    def from_text(cls, context, texts):
        return cls(tuple(parse_polynomial(context, text, len(texts)) for text in texts))

    def reduce(self):
        return ResidueMap(tuple(component.reduce() for component in self.components))


class ResidueMap(PolynomialMap):
    """A map with coefficients in the residue field ``F_q``."""

    def __post_init__(self):
        super().__post_init__()
        if not all(component.is_residue for component in self.components):
            raise ContextMismatch("ResidueMap coefficients must be residues")

    @classmethod
    def from_text(cls, context, texts):
        return cls(
            tuple(parse_residue_polynomial(context, text, len(texts)) for text in texts)
        )


def evaluate(F, x):
    return F(x)


def iterate(F, x, n):
    return F.iterate(x, n)


def reduce_map(F):
    return F.reduce()


def recognize_lift_of_pth_power(F):
    """Returns ``G`` with ``G^p = reduce_map(F)`` componentwise.

    In characteristic ``p`` over a perfect field a polynomial is a ``p``-th
    power iff all its exponents are divisible by ``p``; the root takes the
    ``p``-th root of each coefficient and divides the exponents by ``p``.
    """
    p = F.context.p
    reduced = F.reduce()

    components = []
    for index, component in enumerate(reduced.components):
        terms = []
        for exponents, coeff in component.terms:
            if any(e % p for e in exponents):
                raise NotALift(
                    "Component %d: monomial %s of the reduction has an exponent "
                    "not divisible by %d"
                    % (index, render_monomial(exponents) or "1", p),
                    component=index,
                    monomial=exponents,
                )
            terms.append((tuple(e // p for e in exponents), coeff.pth_root()))
        components.append(Polynomial(component.zero, component.nvars, tuple(terms)))

    return ResidueMap(tuple(components))


def is_power_of(p, n):
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class ComponentWitness:
    """``F_i = (sum_j c_j X_i^{q_j})^p + p * f``."""

    units: Tuple
    powers: Tuple[int, ...]
    remainder: Polynomial


@dataclass(frozen=True)
class RestrictedVerdict:
    restricted: bool
    witness: Optional[Tuple[ComponentWitness, ...]] = None
    reason: str = ""

    def __bool__(self):
        return self.restricted


def _decompose(index, Fi, Gi, p):
    """Witness for component ``index`` or the reason there is none."""
    if Gi.is_zero():
        return None, (
            "component %d: the p-th root of the reduction is 0, no unit "
            "coefficient" % index
        )

    context = Fi.context
    units, powers, terms = [], [], []
    for exponents, coeff in sorted(Gi.terms, key=lambda term: term[0][index]):
        degree = exponents[index]
        others = [j for j, e in enumerate(exponents) if e and j != index]
        if others or not is_power_of(p, degree):
            return None, (
                "component %d: G_%d = %s is not a sum of unit multiples of "
                "p-power monomials in X%d" % (index, index, Gi, index)
            )
        unit = context.lift(coeff)
        units.append(unit)
        powers.append(degree)
        terms.append((exponents, unit))

    Gi_lift = Polynomial(context.zero, Fi.nvars, tuple(terms))
    difference = Fi - Gi_lift ** p
    remainder = Polynomial(
        context.zero,
        Fi.nvars,
        tuple((e, c.divide_by_p(1)) for e, c in difference.terms),
    )
    bound = p * max(powers)
    if remainder.degree >= bound:
        return None, (
            "component %d: deg f_%d = %d is not below deg G_%d^p = %d"
            % (index, index, remainder.degree, index, bound)
        )
    return ComponentWitness(tuple(units), tuple(powers), remainder), None


def is_restricted_syntactic(F):
    """Tests the sufficient shape for a restricted lift of ``p``-th power.

    Each ``F_i`` must read ``(sum_j c_ij X_i^{q_ij})^p + p * f_i`` with unit
    ``c_ij``, strictly increasing ``p``-powers ``q_ij`` (``p^0 = 1``
    included) and ``deg f_i < p * max_j q_ij``. The unit lifts ``c_ij`` are
    the canonical lifts of the residue root's coefficients.
    """
    try:
        G = recognize_lift_of_pth_power(F)
    except NotALift as e:
        return RestrictedVerdict(False, reason=str(e))

    p = F.context.p
    witness = []
    for index, (Fi, Gi) in enumerate(zip(F.components, G.components)):
        component, reason = _decompose(index, Fi, Gi, p)
        if component is None:
            logger.debug("Not syntactically restricted: %s", reason)
            return RestrictedVerdict(False, reason=reason)
        witness.append(component)
    return RestrictedVerdict(True, tuple(witness))


def escape_valuations(F, shifts):
    """Valuations of ``F_i(x)`` at ``x_i = p^(-shifts_i)``.

    Denominators are cleared by the largest weight ``D`` of each component;
    a component vanishing at working precision reports ``N - D``, a lower
    bound. Zero components report ``inf``.
    """
    shifts = tuple(int(s) for s in shifts)
    if len(shifts) != F.dimension:
        raise ContextMismatch(
            "%d shifts given for a map of dimension %d" % (len(shifts), F.dimension)
        )
    if min(shifts) < 0 or max(shifts) <= 0:
        raise ValueError("Shifts must be >= 0 with at least one positive")

    p = F.context.p
    valuations = []
    for component in F.components:
        if component.is_zero():
            valuations.append(math.inf)
            continue
        weights = [
            sum(e * s for e, s in zip(exponents, shifts))
            for exponents, _ in component.terms
        ]
        top = max(weights)
        cleared = F.context.zero
        for (_, coeff), weight in zip(component.terms, weights):
            cleared = cleared + coeff * p ** (top - weight)
        valuations.append(cleared.val() - top)
    return valuations


def escapes(F, shifts):
    """True iff ``|F(x)| > |x|`` at ``x_i = p^(-shifts_i)``."""
    return min(escape_valuations(F, shifts)) < -max(shifts)
