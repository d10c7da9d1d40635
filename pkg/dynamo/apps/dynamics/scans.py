# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from dynamo.core.exceptions import InvarianceError
from dynamo.core.utils.conf import get_setting

from .periodic import (
    check_budget,
    lift_periodic,
    periodic_points_residue,
    require_restricted,
    residue_cycles,
    residue_points,
)
from .polynomials import point_key, reduce_point, render_point
from .variety import contains_residue, gauss_distance


logger = logging.getLogger(__name__)


ON_VARIETY = "on-V"
SUSPECT = "suspect"
OFF_VARIETY = "off-V"


@dataclass(frozen=True)
class GapRow:
    degree: int
    period: int
    point: str
    valuation: int
    status: str


@dataclass(frozen=True)
class GapReport:
    rows: Tuple[GapRow, ...]
    p: int
    precision: int

    @property
    def finite_valuations(self):
        return tuple(
            sorted(row.valuation for row in self.rows if row.status == OFF_VARIETY)
        )

    @property
    def suspect(self):
        return tuple(row for row in self.rows if row.status == SUSPECT)

    @property
    def m_observed(self) -> Optional[int]:
        return max(self.finite_valuations, default=None)

    @property
    def epsilon(self) -> Optional[Fraction]:
        """The observed gap ``p^-M``; ``None`` when every point is on V."""
        if self.m_observed is None:
            return None
        return Fraction(1, self.p ** self.m_observed)


def classify(valuation, precision, band):
    if valuation >= precision:
        return ON_VARIETY
    if valuation >= precision - band:
        return SUSPECT
    return OFF_VARIETY


def tate_voloch_scan(
    F, V, degrees, max_period, override=False, budget=None, suspect_band=None
):
    """Distances from the periodic points of ``F`` to ``V`` over each
    ``Z_{p^k}``, ``k`` in ``degrees``.

    Valuations in ``[N - band, N)`` are reported as suspect instead of off
    ``V``: fixed precision cannot tell them from zero.
    """
    require_restricted(F, override)
    if suspect_band is None:
        suspect_band = get_setting("DYNAMO_SUSPECT_BAND")

    precision = F.context.precision
    reduced = F.reduce()
    found = []
    for k in sorted(set(degrees)):
        context = F.context.with_degree(k)
        Fk = F.base_change(context)
        Vk = V.base_change(context)
        for cycle in periodic_points_residue(reduced, k, max_period, budget):
            point = lift_periodic(Fk, cycle, override=True)
            for y in point.orbit:
                valuation = gauss_distance(y, Vk)
                status = classify(valuation, precision, suspect_band)
                if status == SUSPECT:
                    logger.warning(
                        "Valuation %d of %s is within %d of precision %d",
                        valuation,
                        render_point(y),
                        suspect_band,
                        precision,
                    )
                found.append(
                    (
                        (k, point_key(reduce_point(y))),
                        GapRow(k, point.period, render_point(y), valuation, status),
                    )
                )

    found.sort(key=lambda item: item[0])
    report = GapReport(tuple(row for _, row in found), F.context.p, precision)
    logger.info(
        "Scanned %d periodic points, %d off V, M_observed = %s",
        len(report.rows),
        len(report.finite_valuations),
        report.m_observed,
    )
    return report


@dataclass(frozen=True)
class DensityRow:
    degree: int
    variety_points: int
    periodic_on_variety: int
    lifted_on_variety: int

    @property
    def verified(self):
        return self.lifted_on_variety == self.periodic_on_variety


@dataclass(frozen=True)
class DensityReport:
    rows: Tuple[DensityRow, ...]

    @property
    def counts(self):
        return tuple(row.periodic_on_variety for row in self.rows)

    @property
    def strictly_increasing(self):
        return all(a < b for a, b in zip(self.counts, self.counts[1:]))

    @property
    def verified(self):
        return all(row.verified for row in self.rows)


def check_invariance(residue_map, reduced_generators, points, power=1):
    """Raises unless ``F^power`` maps each of ``points`` back onto the
    reduced variety.
    """
    for point in points:
        image = residue_map.iterate(point, power)
        if not contains_residue(reduced_generators, image):
            raise InvarianceError(
                "The reduction of F^%d maps %s on the variety to %s off it"
                % (power, render_point(point), render_point(image))
            )


def manin_mumford_scan(
    F, V, degrees, invariance_power=1, override=False, budget=None
):
    """Per degree: points of the reduced variety, periodic ones among them
    and lifts of those that land on ``V`` at precision.
    """
    require_restricted(F, override)
    if invariance_power < 1:
        raise ValueError("invariance_power must be >= 1")

    precision = F.context.precision
    rows = []
    for k in sorted(set(degrees)):
        context = F.context.with_degree(k)
        check_budget(context, F.dimension, budget)
        Fk = F.base_change(context)
        Vk = V.base_change(context)
        residue_map = Fk.reduce()
        reduced_generators = Vk.reduce()

        points = residue_points(context, F.dimension)
        on_variety = {x for x in points if contains_residue(reduced_generators, x)}
        check_invariance(
            residue_map,
            reduced_generators,
            sorted(on_variety, key=point_key),
            invariance_power,
        )

        periodic_on_variety = 0
        lifted_on_variety = 0
        for cycle in residue_cycles(residue_map, points):
            hits = [x for x in cycle.points if x in on_variety]
            if not hits:
                continue
            periodic_on_variety += len(hits)
            lifted = lift_periodic(Fk, cycle, override=True)
            for y in lifted.orbit:
                if reduce_point(y) not in on_variety:
                    continue
                if gauss_distance(y, Vk) == precision:
                    lifted_on_variety += 1
                else:
                    logger.warning(
                        "Lift %s of a periodic point of the reduced variety is "
                        "off V at precision %d",
                        render_point(y),
                        precision,
                    )

        rows.append(
            DensityRow(k, len(on_variety), periodic_on_variety, lifted_on_variety)
        )
        logger.info(
            "k = %d: %d variety points, %d periodic, %d lifted on V",
            k,
            len(on_variety),
            periodic_on_variety,
            lifted_on_variety,
        )
    return DensityReport(tuple(rows))
