# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Periodic points of ``F`` over ``Z_q`` and of its reduction over ``F_q``.

For a restricted lift of ``p``-th power, ``F^n`` contracts the residue disc
of a period-``n`` residue point by at least one digit per application, so
``N`` applications from any lift land on the unique periodic point in that
disc.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from dynamo.apps.padic.rings import residue_field_elements
from dynamo.core.exceptions import (
    BudgetExceeded,
    ConvergenceError,
    IncompatibleCycle,
    NotRestricted,
    ResidueDiscMismatch,
)
from dynamo.core.utils.conf import get_budget

from .maps import is_restricted_syntactic
from .polynomials import point_key, reduce_point, render_point


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResidueCycle:
    """Distinct residue points with ``F(points[i]) = points[i + 1 mod n]``."""

    points: Tuple[tuple, ...]

    def __post_init__(self):
        points = tuple(tuple(point) for point in self.points)
        if not points:
            raise ValueError("A cycle has at least one point")
        if len(set(points)) != len(points):
            raise ValueError("Cycle points must be distinct")
        object.__setattr__(self, "points", points)

    def __str__(self):
        return "[%s]" % " -> ".join(render_point(point) for point in self.points)

    @property
    def period(self):
        return len(self.points)

    @property
    def context(self):
        return self.points[0][0].context

    @property
    def key(self):
        return tuple(point_key(point) for point in self.points)

    def canonical(self):
        """The rotation starting at the smallest point."""
        start = min(range(self.period), key=lambda i: point_key(self.points[i]))
        return ResidueCycle(self.points[start:] + self.points[:start])

    def chi_order(self):
        """``(a, F^{n-1}(a), ..., F(a))``: each entry is the image of the
        next one.
        """
        return (self.points[0],) + tuple(reversed(self.points[1:]))

    def is_cycle_of(self, residue_map):
        return all(
            residue_map(point) == self.points[(i + 1) % self.period]
            for i, point in enumerate(self.points)
        )


@dataclass(frozen=True)
class PeriodicPoint:
    coords: tuple
    period: int
    residue_cycle: ResidueCycle
    orbit: Tuple[tuple, ...]

    def __str__(self):
        return render_point(self.coords)


class ContractionWitness(NamedTuple):
    v_in: int
    v_out: int

    def satisfies_estimate(self, p, precision):
        return self.v_out >= min(p * self.v_in, self.v_in + 1, precision)


def check_budget(context, dimension, budget=None):
    budget = get_budget(budget)
    required = context.q ** dimension
    if required > budget:
        raise BudgetExceeded(required, budget)
    return required


def residue_points(context, dimension):
    """Every point of ``F_q^dimension`` in canonical order."""
    elements = residue_field_elements(context)
    return [tuple(point) for point in itertools.product(elements, repeat=dimension)]


def residue_cycles(residue_map, points):
    """All cycles of ``residue_map`` on the finite set ``points``, found by
    walking the functional graph from every unvisited point.
    """
    done = set()
    cycles = []
    for start in points:
        if start in done:
            continue
        path, index = [], {}
        point = start
        while point not in done and point not in index:
            index[point] = len(path)
            path.append(point)
            point = residue_map(point)
        if point in index:
            cycles.append(ResidueCycle(tuple(path[index[point]:])).canonical())
        done.update(path)
    return sorted(cycles, key=lambda cycle: point_key(cycle.points[0]))


def periodic_points_residue(residue_map, k, max_period, budget=None):
    """Cycles of length at most ``max_period`` of ``residue_map`` over
    ``F_{p^k}``.
    """
    context = residue_map.context.with_degree(k)
    check_budget(context, residue_map.dimension, budget)
    extended = residue_map.base_change(context)

    cycles = [
        cycle
        for cycle in residue_cycles(
            extended, residue_points(context, extended.dimension)
        )
        if cycle.period <= max_period
    ]
    logger.info(
        "Found %d cycles of length <= %d over F_%d^%d",
        len(cycles),
        max_period,
        context.p,
        k,
    )
    return cycles


def require_restricted(F, override=False):
    if override:
        return
    verdict = is_restricted_syntactic(F)
    if not verdict:
        raise NotRestricted(
            "%s is not syntactically a restricted lift of p-th power (%s); "
            "use --override-restricted to assert it" % (F, verdict.reason)
        )


def lift_periodic(F, cycle, override=False):
    """The periodic point of ``F`` reducing to ``cycle.points[0]``."""
    require_restricted(F, override)

    target = cycle.context.with_precision(F.context.precision)
    G = F.base_change(target)
    if not cycle.is_cycle_of(G.reduce()):
        raise IncompatibleCycle(
            "%s is not a cycle of the reduction of %s" % (cycle, F)
        )

    n = cycle.period
    point = tuple(target.lift(coordinate) for coordinate in cycle.points[0])
    for _ in range(target.precision):
        point = G.iterate(point, n)

    if G.iterate(point, n) != point:
        raise ConvergenceError(
            "No fixed point of F^%d after %d iterations from %s; the map is "
            "probably not restricted" % (n, target.precision, cycle)
        )

    orbit = [point]
    for _ in range(n - 1):
        orbit.append(G(orbit[-1]))
    logger.debug("Lifted %s to %s", cycle, render_point(point))
    return PeriodicPoint(
        point, n, ResidueCycle(tuple(reduce_point(y) for y in orbit)), tuple(orbit)
    )


def contraction_witness(F, x, x2):
    """``(v_in, v_out)``: closeness of two points of one residue disc
    before and after applying ``F``.
    """
    if reduce_point(x) != reduce_point(x2):
        raise ResidueDiscMismatch(
            "%s and %s lie in different residue discs"
            % (render_point(x), render_point(x2))
        )
    v_in = min((a - b).val() for a, b in zip(x, x2))
    v_out = min((a - b).val() for a, b in zip(F(x), F(x2)))
    return ContractionWitness(v_in, v_out)


def tilt_periodic(point):
    """The reduction of ``point``'s orbit, in forward order from ``red(x)``.

    Read through ``ResidueCycle.chi_order`` it is the compatible sequence
    attached to the point.
    """
    return ResidueCycle(tuple(reduce_point(y) for y in point.orbit))
