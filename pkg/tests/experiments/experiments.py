# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

from fractions import Fraction

import pytest

from dynamo.apps.experiments.config import parse_config
from dynamo.apps.experiments.experiments import EXPERIMENTS, run
from dynamo.apps.stability.preimages import BOUNDED, GROWING
from dynamo.core.exceptions import (
    BudgetExceeded,
    ConfigError,
    NoBackwardOrbit,
    NotRestricted,
)

from tests.fixtures.configs import SQUARE_PLUS


def summary(reporter):
    return dict(reporter.summary)


def cells(reporter, column):
    index = reporter.columns.index(column)
    return [str(row[index]) for row in reporter.rows]


def test_registry():
    assert sorted(EXPERIMENTS) == [
        "backward-orbit",
        "check-lift",
        "gauss-norm",
        "lift",
        "manin-mumford",
        "per-points",
        "stability",
        "tate-voloch",
    ]


def test_unknown_experiment():
    with pytest.raises(ConfigError) as e:
        run("lyapunov", parse_config(SQUARE_PLUS))
    assert "unknown experiment 'lyapunov'" in str(e.value)


def test_check_lift():
    reporter = run("check-lift", parse_config(SQUARE_PLUS))
    result = summary(reporter)
    assert result["lift"] is True
    assert str(result["G"]) == "(X0)"
    assert result["restricted(syntactic)"] is True
    assert result["escapes"] is True
    assert "reason" not in result
    assert len(reporter.rows) == 1


def test_check_lift_not_a_lift():
    config = parse_config("p = 2\nmap = X0^2 + X0\n")
    reporter = run("check-lift", config)
    result = summary(reporter)
    assert result["lift"] is False
    assert "not divisible by 2" in str(result["reason"])
    assert reporter.rows[0][2:] == (None, None, None)


def test_check_lift_not_restricted():
    config = parse_config("p = 2\nmap = X0^2 + 2*X0^3\n")
    result = summary(run("check-lift", config))
    assert result["lift"] is True
    assert result["restricted(syntactic)"] is False
    assert result["reason"]


def test_per_points_f4():
    config = parse_config("p = 2\nk = 2\nmap = X0^2\nmax_period = 2\n")
    reporter = run("per-points", config)
    assert cells(reporter, "cycle") == ["[(0)]", "[(w) -> (w+1)]", "[(1)]"]
    assert cells(reporter, "degree") == ["2", "2", "2"]
    assert summary(reporter) == {"cycles": 3, "periodic points": 4}


def test_per_points_budget():
    config = parse_config("p = 2\nmap = X0^2\ndegrees = 1..4\n")
    with pytest.raises(BudgetExceeded):
        run("per-points", config, budget=8)


def test_lift():
    reporter = run("lift", parse_config(SQUARE_PLUS))
    assert cells(reporter, "lift") == ["(0)", "(255)"]
    assert cells(reporter, "verified") == ["True", "True"]
    assert summary(reporter) == {
        "residue periodic points": 2,
        "lifted periodic points": 2,
        "bijection": True,
        "contraction samples": 2,
        "contraction violations": 0,
    }


def test_lift_counts_distinct_points_over_every_degree():
    config = parse_config(
        "p = 2\nN = 16\nmap = X0^2 + 2*X0\ndegrees = 1..2\nmax_period = 2\n"
    )
    reporter = run("lift", config)
    assert cells(reporter, "degree") == ["1", "1", "2", "2", "2"]
    result = summary(reporter)
    assert result["residue periodic points"] == 2 + 4
    assert result["lifted periodic points"] == 2 + 4
    assert result["bijection"] is True
    assert result["contraction samples"] == 6


CUBE_PLUS = "p = 3\nN = 12\nmap = X0^3 + 3*X0\ndegrees = 1..2\n"


def test_lift_contraction_samples():
    result = summary(run("lift", parse_config(CUBE_PLUS)))
    assert result["contraction samples"] == result["lifted periodic points"]
    assert result["contraction violations"] == 0

    reseeded = parse_config(CUBE_PLUS + "seed = 5\n")
    assert summary(run("lift", reseeded)) == result


def test_lift_not_restricted():
    config = parse_config("p = 2\nmap = X0^2 + 2*X0^3\n")
    with pytest.raises(NotRestricted):
        run("lift", config)


def test_tate_voloch():
    config = parse_config(
        "p = 2\nN = 16\nmap = X0^2\nvariety = X0 - 1\ndegrees = 1..3\n"
    )
    reporter = run("tate-voloch", config)
    result = summary(reporter)
    assert result["points"] == 2 + 4 + 8
    assert result["suspect"] == 0
    assert result["M_observed"] == 0
    assert result["epsilon"] == Fraction(1)


def test_manin_mumford():
    reporter = run("manin-mumford", parse_config(SQUARE_PLUS))
    assert reporter.rows == [(1, 1, 1, 1)]
    assert summary(reporter)["verified"] is True


def test_stability_growing():
    config = parse_config(
        "p = 3\nmap = X0^2\npoint = 1\nn_max = 5\ndegree_bound = 8\n"
    )
    reporter = run("stability", config)
    assert [row[2] for row in reporter.rows] == [1, 2, 3, 5, 7, 9]
    assert summary(reporter) == {"verdict": GROWING}


def test_stability_bounded():
    config = parse_config("p = 3\nmap = X0^2\npoint = 0\nn_max = 3\n")
    assert summary(run("stability", config)) == {"verdict": BOUNDED}


def test_stability_requires_point():
    with pytest.raises(ConfigError) as e:
        run("stability", parse_config(SQUARE_PLUS))
    assert e.value.errors == ["point is required for this experiment"]


BACKWARD = """\
p = 5
dim = 2
map = X0^2
map = X1^3
variety = X0 - X1
point = 1, 1
depth = 4
degree_bound = 2
"""


def test_backward_orbit():
    reporter = run("backward-orbit", parse_config(BACKWARD))
    assert cells(reporter, "point") == ["(1, 1)"] * 5
    assert cells(reporter, "hit") == ["True"] * 5
    assert summary(reporter) == {
        "hits": "0,1,2,3,4",
        "degree": 1,
        "coherent": True,
        "progression": "0+1t",
    }


def test_backward_orbit_no_orbit():
    # 2 has no square root in F_3 and the degree bound forbids F_9
    config = parse_config(
        "p = 3\nmap = X0^2\nvariety = X0\npoint = 2\ndepth = 1\ndegree_bound = 1\n"
    )
    with pytest.raises(NoBackwardOrbit):
        run("backward-orbit", config)


def test_gauss_norm():
    config = parse_config("p = 2\nmap = X0^2\nvariety = 4*X0^3 + 2*X0 + 6\n")
    reporter = run("gauss-norm", config)
    ((text, norm, value),) = reporter.rows
    assert text == "4*X0^3 + 2*X0 + 6"
    assert norm == 1
    assert str(value) == "(1, gamma^1)"
    assert summary(reporter) == {"generators": 1}


def test_gauss_norm_requires_variety():
    with pytest.raises(ConfigError):
        run("gauss-norm", parse_config("p = 2\nmap = X0^2\n"))


DETERMINISM_CONFIGS = {
    "backward-orbit": BACKWARD,
    "stability": "p = 3\nmap = X0^2\npoint = 1\nn_max = 3\ndegree_bound = 4\n",
}


@pytest.mark.parametrize("name", sorted(EXPERIMENTS))
def test_reports_are_deterministic(name):
    text = DETERMINISM_CONFIGS.get(name, SQUARE_PLUS)
    first, second = (run(name, parse_config(text)).get_data() for _ in range(2))
    assert first == second
