# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from dynamo.apps.dynamics.polynomials import point_key, render_point
from dynamo.apps.dynamics.variety import contains_residue
from dynamo.core.exceptions import NoBackwardOrbit
from dynamo.core.utils.conf import get_setting

from .preimages import PreimageExplorer


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BackwardOrbit:
    """``(a_0, ..., a_D)`` with ``F(a_{i+1}) = a_i``; ``hits`` are the
    indices of points on the variety.
    """

    points: Tuple[tuple, ...]
    hits: Tuple[int, ...]
    degree: int

    def __str__(self):
        return " <- ".join(render_point(point) for point in self.points)

    @property
    def depth(self):
        return len(self.points) - 1

    def is_coherent(self, residue_map):
        if not self.points:
            return False
        extended = residue_map.base_change(self.points[0][0].context)
        return all(
            extended(self.points[i + 1]) == self.points[i]
            for i in range(self.depth)
        )


class Progression(NamedTuple):
    offset: int
    step: int


class _ChainSearch:
    """Best chains below each node of one field, memoized by remaining
    depth. A chain is better with more hits, then with the smaller point
    sequence.
    """

    def __init__(self, explorer, j, generators, lookahead):
        self.explorer = explorer
        self.j = j
        self.generators = generators
        self.lookahead = lookahead
        self._best = {}
        self._hit = {}

    def is_hit(self, point):
        if point not in self._hit:
            self._hit[point] = contains_residue(self.generators, point)
        return self._hit[point]

    def promise(self, point, levels):
        """Variety points in the subtree of ``point``, ``levels`` deep."""
        total = int(self.is_hit(point))
        if levels:
            for child in self.explorer.preimages(point, self.j):
                total += self.promise(child, levels - 1)
        return total

    def children(self, point):
        return sorted(
            self.explorer.preimages(point, self.j),
            key=lambda child: (-self.promise(child, self.lookahead), point_key(child)),
        )

    def best(self, point, remaining):
        """``(hits, keys, chain)`` of the best chain from ``point`` with
        ``remaining`` backward steps, or ``None``.
        """
        memo = (point, remaining)
        if memo in self._best:
            return self._best[memo]

        own = int(self.is_hit(point))
        if not remaining:
            result = (own, (point_key(point),), (point,))
        else:
            result = None
            for child in self.children(point):
                below = self.best(child, remaining - 1)
                if below is None:
                    continue
                candidate = (
                    own + below[0],
                    (point_key(point),) + below[1],
                    (point,) + below[2],
                )
                if result is None or (-candidate[0], candidate[1]) < (
                    -result[0],
                    result[1],
                ):
                    result = candidate
        self._best[memo] = result
        return result


def coherent_backward_orbit_search(
    residue_map,
    x0,
    generators,
    depth=None,
    degree_bound=2,
    lookahead=None,
    budget=None,
):
    """The coherent backward orbit of length ``depth`` from ``x0`` with the
    most points on the reduced variety ``generators``.

    Every field ``F_{p^{jk}}``, ``j <= degree_bound``, is searched
    exhaustively; ties go to the smaller field, then to the smaller point
    sequence. ``lookahead`` only orders the exploration of preimages.
    """
    if depth is None:
        depth = get_setting("DYNAMO_BACKWARD_DEPTH")
    if lookahead is None:
        lookahead = get_setting("DYNAMO_BACKWARD_LOOKAHEAD")

    explorer = PreimageExplorer(residue_map, degree_bound, budget)
    found = None
    for j in range(1, degree_bound + 1):
        context = explorer.context(j)
        extended = tuple(h.base_change(context) for h in generators)
        search = _ChainSearch(explorer, j, extended, lookahead)
        result = search.best(explorer.embed_point(x0, j), depth)
        if result is None:
            logger.debug("No coherent chain of depth %d over %s", depth, context)
            continue
        if found is None or result[0] > found[1][0]:
            found = (j, result)

    if found is None:
        raise NoBackwardOrbit(
            "No coherent backward orbit of depth %d from %s within degree "
            "bound %d" % (depth, render_point(x0), degree_bound)
        )

    j, (_, _, chain) = found
    extended = tuple(h.base_change(explorer.context(j)) for h in generators)
    hits = tuple(
        i for i, point in enumerate(chain) if contains_residue(extended, point)
    )
    orbit = BackwardOrbit(chain, hits, j * explorer.base_degree)
    logger.info("Best backward orbit has %d hits: %s", len(orbit.hits), orbit)
    return orbit


def hit_progression(orbit) -> Optional[Progression]:
    """The arithmetic progression whose trace on ``[0, D]`` is exactly the
    hit set, if there is one.
    """
    hits = sorted(orbit.hits)
    if not hits:
        return None
    if len(hits) == 1:
        return Progression(hits[0], 0)
    step = hits[1] - hits[0]
    if set(range(hits[0], orbit.depth + 1, step)) != set(hits):
        return None
    return Progression(hits[0], step)
