# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

import pytest

from dynamo.apps.dynamics.grammar import parse_residue_point, parse_residue_polynomial
from dynamo.apps.padic.rings import PAdicContext
from dynamo.apps.stability.backward import (
    BackwardOrbit,
    Progression,
    coherent_backward_orbit_search,
    hit_progression,
)
from dynamo.core.exceptions import NoBackwardOrbit

from tests.factories import ResidueMapFactory


@pytest.fixture
def z5():
    return PAdicContext(5, 1, 8)


@pytest.fixture
def square_cube(z5):
    return ResidueMapFactory(context=z5, texts=("X0^2", "X1^3"))


def diagonal(context):
    return (parse_residue_polynomial(context, "X0 - X1", 2),)


def test_constant_chain_on_the_diagonal(z5, square_cube):
    x0 = parse_residue_point(z5, "1, 1")
    orbit = coherent_backward_orbit_search(
        square_cube, x0, diagonal(z5), depth=4, degree_bound=2
    )
    assert orbit.points == (x0,) * 5
    assert orbit.hits == (0, 1, 2, 3, 4)
    assert orbit.degree == 1
    assert orbit.depth == 4
    assert orbit.is_coherent(square_cube)
    assert hit_progression(orbit) == Progression(0, 1)


def test_no_hits(z5, square_cube):
    x0 = parse_residue_point(z5, "1, 1")
    generators = (parse_residue_polynomial(z5, "1", 2),)
    orbit = coherent_backward_orbit_search(
        square_cube, x0, generators, depth=3, degree_bound=1
    )
    assert orbit.hits == ()
    assert orbit.points == (x0,) * 4
    assert orbit.is_coherent(square_cube)
    assert hit_progression(orbit) is None


def test_lookahead_does_not_change_the_result(z5, square_cube):
    x0 = parse_residue_point(z5, "4, 1")
    results = {
        coherent_backward_orbit_search(
            square_cube, x0, diagonal(z5), depth=3, degree_bound=2, lookahead=lookahead
        )
        for lookahead in (0, 1, 3)
    }
    assert len(results) == 1
    (orbit,) = results
    assert orbit.is_coherent(square_cube)


def test_larger_field(z3):
    residue_map = ResidueMapFactory(context=z3, texts=("X0^2",))
    x0 = parse_residue_point(z3, "2")
    generators = (parse_residue_polynomial(z3, "X0^2 - 2", 1),)
    orbit = coherent_backward_orbit_search(
        residue_map, x0, generators, depth=1, degree_bound=2
    )
    assert orbit.degree == 2
    assert orbit.hits == (1,)
    assert orbit.is_coherent(residue_map)


def test_no_backward_orbit(z3):
    residue_map = ResidueMapFactory(context=z3, texts=("X0^2",))
    x0 = parse_residue_point(z3, "2")
    with pytest.raises(NoBackwardOrbit):
        coherent_backward_orbit_search(
            residue_map, x0, (), depth=1, degree_bound=1, lookahead=0
        )


def test_depth_from_settings(z5, square_cube, settings):
    settings.DYNAMO_BACKWARD_DEPTH = 2
    x0 = parse_residue_point(z5, "1, 1")
    orbit = coherent_backward_orbit_search(square_cube, x0, diagonal(z5))
    assert orbit.depth == 2


@pytest.mark.parametrize(
    "hits, depth, expected",
    [
        ((0, 2, 4), 5, Progression(0, 2)),
        ((1, 4, 7), 8, Progression(1, 3)),
        ((3,), 8, Progression(3, 0)),
        ((0, 2), 5, None),
        ((0, 1, 3), 3, None),
    ],
)
def test_hit_progression(z5, hits, depth, expected):
    point = parse_residue_point(z5, "0, 0")
    orbit = BackwardOrbit((point,) * (depth + 1), hits, 1)
    assert hit_progression(orbit) == expected


@pytest.mark.parametrize("start", ["2, 2", "3, 2", "4, 4", "2, 3"])
def test_deeper_search_keeps_hits(z5, start):
    # X0^3 permutes F_5, so every point has exactly one chain
    residue_map = ResidueMapFactory(context=z5, texts=("X0^3", "X1"))
    x0 = parse_residue_point(z5, start)
    orbits = [
        coherent_backward_orbit_search(
            residue_map, x0, diagonal(z5), depth=depth, degree_bound=1
        )
        for depth in range(5)
    ]
    for shorter, longer in zip(orbits, orbits[1:]):
        assert longer.points[: len(shorter.points)] == shorter.points
        assert set(shorter.hits) <= set(longer.hits)


def best_hit_count(residue_map, x0, generators, degree_bound):
    try:
        orbit = coherent_backward_orbit_search(
            residue_map, x0, generators, depth=2, degree_bound=degree_bound
        )
    except NoBackwardOrbit:
        return None
    return len(orbit.hits)


@pytest.mark.parametrize("start", ["4, 1", "1, 4", "4, 4", "0, 1"])
def test_larger_degree_bound_keeps_hits(z5, square_cube, start):
    x0 = parse_residue_point(z5, start)
    smaller = best_hit_count(square_cube, x0, diagonal(z5), 1)
    larger = best_hit_count(square_cube, x0, diagonal(z5), 2)
    assert larger is not None
    if smaller is not None:
        assert larger >= smaller
