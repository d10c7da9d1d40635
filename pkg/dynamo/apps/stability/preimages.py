# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Iterated preimages over finite fields and their Frobenius orbits.

Preimages of a point of ``F_{p^k}^N`` are searched in ``F_{p^{jk}}`` for
``j = 1 .. degree_bound``. Each field gets a full image table once, so
backward steps are dictionary lookups.
"""

import logging
from dataclasses import dataclass
from functools import reduce
from operator import mul
from typing import Tuple

from sympy import divisors, ilcm

from dynamo.apps.dynamics.periodic import check_budget, residue_points
from dynamo.apps.dynamics.polynomials import point_key, render_point
from dynamo.apps.padic.extensions import embed
from dynamo.core.exceptions import IncompletePreimages


logger = logging.getLogger(__name__)


BOUNDED = "bounded"
GROWING = "growing"


class PreimageExplorer:
    """Backward steps of ``residue_map`` inside ``F_{p^{jk}}``."""

    def __init__(self, residue_map, degree_bound, budget=None):
        self.residue_map = residue_map
        self.degree_bound = degree_bound
        self.budget = budget
        self._fields = {}

    @property
    def base_degree(self):
        return self.residue_map.context.k

    def context(self, j):
        return self.residue_map.context.with_degree(j * self.base_degree)

    def field(self, j):
        """``(map over F_{p^{jk}}, point -> sorted preimages)``."""
        if j not in self._fields:
            context = self.context(j)
            check_budget(context, self.residue_map.dimension, self.budget)
            extended = self.residue_map.base_change(context)
            inverse = {}
            for point in residue_points(context, extended.dimension):
                inverse.setdefault(extended(point), []).append(point)
            self._fields[j] = (extended, inverse)
            logger.debug("Built the image table over %s", context)
        return self._fields[j]

    def embed_point(self, point, j):
        context = self.context(j)
        return tuple(embed(coordinate, context) for coordinate in point)

    def preimages(self, point, j):
        _, inverse = self.field(j)
        return inverse.get(point, [])

    def level(self, point, n, j):
        """``F^-n(point)`` inside field ``j``, in canonical order."""
        frontier = [self.embed_point(point, j)]
        for _ in range(n):
            frontier = [y for x in frontier for y in self.preimages(x, j)]
        return sorted(frontier, key=point_key)


@dataclass(frozen=True)
class PreimageSet:
    base_point: tuple
    n: int
    points: Tuple[tuple, ...]
    degree: int
    complete: bool

    def __len__(self):
        return len(self.points)


def bezout_bound(residue_map, n):
    """``prod(deg F_i)^n``, or ``None`` when a component is constant."""
    degrees = residue_map.degrees
    if min(degrees) < 1:
        return None
    return reduce(mul, degrees, 1) ** n


def new_point_counts(counts):
    """Points whose smallest field is ``F_{p^{dk}}``, per ``d``.

    ``counts[j]`` is the number of points over ``F_{p^{jk}}``, which holds
    exactly the points whose degree ``d`` divides ``j``.
    """
    new = {}
    for j in sorted(counts):
        new[j] = counts[j] - sum(new[d] for d in divisors(j)[:-1])
    return new


def preimage_set(residue_map, x, n, degree_bound, budget=None, explorer=None):
    """Solutions of ``F^n(y) = x`` over ``F_{p^m}``, ``m = k, 2k, ...``.

    Stops at the first field holding ``prod(deg F_i)^n`` solutions, which
    is then provably all of them. Otherwise the points found in every
    field tried are collected in the smallest field containing them all,
    and the set is marked complete when no field in the upper half of the
    degree bound contributed a new point.
    """
    if explorer is None:
        explorer = PreimageExplorer(residue_map, degree_bound, budget)
    bound = bezout_bound(residue_map, n)

    counts = {}
    for j in range(1, degree_bound + 1):
        points = explorer.level(x, n, j)
        if bound is not None and len(points) == bound:
            return PreimageSet(
                tuple(x), n, tuple(points), j * explorer.base_degree, True
            )
        counts[j] = len(points)

    new = new_point_counts(counts)
    found = [d for d, count in new.items() if count]
    # may lie past degree_bound, e.g. points of degree 2 and 3 over F_{p^6}
    union = int(reduce(ilcm, found, 1))
    points = explorer.level(x, n, union)

    complete = 2 * max(found, default=1) <= degree_bound
    if not complete:
        logger.warning(
            "Preimages of %s at depth %d may be incomplete (counts %s up to "
            "degree bound %d)",
            render_point(x),
            n,
            [counts[i] for i in sorted(counts)],
            degree_bound,
        )
    return PreimageSet(
        tuple(x), n, tuple(points), union * explorer.base_degree, complete
    )


def frobenius_point(point, q):
    return tuple(coordinate ** q for coordinate in point)


def galois_orbits(preimages, base_degree=None):
    """Orbits of the ``q = p^base_degree`` Frobenius on ``preimages``."""
    if not preimages.complete:
        raise IncompletePreimages(
            "Preimages of %s at depth %d are not known to be complete"
            % (render_point(preimages.base_point), preimages.n)
        )
    if not preimages.points:
        return []

    context = preimages.points[0][0].context
    if base_degree is None:
        base_degree = preimages.base_point[0].context.k
    q = context.p ** base_degree

    seen = set()
    orbits = []
    for point in preimages.points:
        if point in seen:
            continue
        orbit = [point]
        image = frobenius_point(point, q)
        while image != point:
            orbit.append(image)
            image = frobenius_point(image, q)
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit, key=point_key)))
    return orbits


def galois_orbit_count(preimages, base_degree=None):
    return len(galois_orbits(preimages, base_degree))


@dataclass(frozen=True)
class OrbitRow:
    n: int
    preimages: int
    orbits: int
    degree: int


@dataclass(frozen=True)
class OrbitReport:
    rows: Tuple[OrbitRow, ...]
    verdict: str

    @property
    def counts(self):
        return tuple(row.orbits for row in self.rows)


def stability_verdict(counts):
    """``bounded`` when the counts are flat over the last three entries or
    never exceed an earlier peak afterwards; a heuristic, not a proof.
    """
    counts = list(counts)
    tail = counts[-3:]
    if len(set(tail)) == 1:
        return BOUNDED
    peak = counts.index(max(counts))
    after = counts[peak:]
    if peak < len(counts) - 1 and all(a >= b for a, b in zip(after, after[1:])):
        return BOUNDED
    return GROWING


def eventual_stability_probe(residue_map, x, n_max, degree_bound, budget=None):
    """Galois orbit counts of ``F^-n(x)`` for ``n = 0 .. n_max``."""
    explorer = PreimageExplorer(residue_map, degree_bound, budget)
    rows = []
    for n in range(n_max + 1):
        preimages = preimage_set(residue_map, x, n, degree_bound, explorer=explorer)
        rows.append(
            OrbitRow(n, len(preimages), galois_orbit_count(preimages), preimages.degree)
        )
        logger.info(
            "n = %d: %d preimages in %d Galois orbits (degree %d)",
            n,
            rows[-1].preimages,
            rows[-1].orbits,
            preimages.degree,
        )
    return OrbitReport(tuple(rows), stability_verdict(row.orbits for row in rows))
