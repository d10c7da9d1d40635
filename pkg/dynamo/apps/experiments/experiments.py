# -*- coding: utf-8 -*-
#
# Copyright (C) padic-dynamo contributors.
#
# This file is a part of the padic-dynamo project. It is distributed under the
# GPL3 or later license. See the LICENSE file for a copy of the license and the
# AUTHORS file for copyright and authorship information.

"""Experiment runners, one per subcommand.

Each runner takes a validated ``ExperimentConfig`` and returns a filled
``TSVReporter``; module errors propagate to the caller.
"""

import logging
import random

from dynamo.apps.dynamics.maps import (
    escapes,
    is_restricted_syntactic,
    recognize_lift_of_pth_power,
)
from dynamo.apps.dynamics.periodic import (
    contraction_witness,
    lift_periodic,
    periodic_points_residue,
    require_restricted,
    tilt_periodic,
)
from dynamo.apps.dynamics.polynomials import render_point
from dynamo.apps.dynamics.scans import manin_mumford_scan, tate_voloch_scan
from dynamo.apps.stability.backward import (
    coherent_backward_orbit_search,
    hit_progression,
)
from dynamo.apps.stability.preimages import eventual_stability_probe
from dynamo.apps.valuations.gamma import rank2_val
from dynamo.apps.valuations.gauss import gauss_norm
from dynamo.core.exceptions import ConfigError, NotALift

from .reporters import TSVReporter


logger = logging.getLogger(__name__)


EXPERIMENTS = {}


def experiment(name):
    def register(func):
        EXPERIMENTS[name] = func
        return func

    return register


def require(config, *names):
    missing = [name for name in names if not getattr(config, name)]
    if missing:
        raise ConfigError(["%s is required for this experiment" % n for n in missing])


@experiment("check-lift")
def check_lift(config, budget=None, override_restricted=False):
    F = config.build_map()
    reporter = TSVReporter("check-lift", config)
    reporter.columns = ["component", "reduction", "root", "powers", "remainder_degree"]

    try:
        G = recognize_lift_of_pth_power(F)
    except NotALift as e:
        reduced = F.reduce()
        for index, component in enumerate(reduced.components):
            reporter.add(index, component, None, None, None)
        reporter.add_summary("lift", False)
        reporter.add_summary("reason", e)
        return reporter

    verdict = is_restricted_syntactic(F)
    for index, (component, root) in enumerate(zip(F.reduce().components, G.components)):
        if verdict:
            witness = verdict.witness[index]
            powers = ",".join(str(q) for q in witness.powers)
            degree = witness.remainder.degree
        else:
            powers = degree = None
        reporter.add(index, component, root, powers, degree)

    reporter.add_summary("lift", True)
    reporter.add_summary("G", G)
    reporter.add_summary("restricted(syntactic)", bool(verdict))
    if not verdict:
        reporter.add_summary("reason", verdict.reason)
    reporter.add_summary("escapes", escapes(F, (1,) * F.dimension))
    return reporter


@experiment("per-points")
def per_points(config, budget=None, override_restricted=False):
    residue_map = config.build_map().reduce()
    reporter = TSVReporter("per-points", config)
    reporter.columns = ["degree", "period", "cycle"]

    total = 0
    for k in config.degrees:
        for cycle in periodic_points_residue(residue_map, k, config.max_period, budget):
            reporter.add(k, cycle.period, cycle)
            total += cycle.period
    reporter.add_summary("cycles", len(reporter.rows))
    reporter.add_summary("periodic points", total)
    return reporter


@experiment("lift")
def lift(config, budget=None, override_restricted=False):
    F = config.build_map()
    require_restricted(F, override_restricted)
    residue_map = F.reduce()
    reporter = TSVReporter("lift", config)
    reporter.columns = ["degree", "period", "cycle", "lift", "tilt", "verified"]

    rng = random.Random(config.seed)
    residue_count = samples = violations = 0
    lifted = set()
    for k in config.degrees:
        Fk = F.base_change(F.context.with_degree(k))
        for cycle in periodic_points_residue(residue_map, k, config.max_period, budget):
            point = lift_periodic(Fk, cycle, override=True)
            tilt = tilt_periodic(point)
            verified = (
                Fk.iterate(point.coords, point.period) == point.coords and tilt == cycle
            )
            reporter.add(k, cycle.period, cycle, point, tilt, verified)
            residue_count += cycle.period
            lifted.update(point.orbit)

            # one seeded neighbour per point of the orbit, in its residue disc
            for y in point.orbit:
                witness = contraction_witness(Fk, y, perturb(rng, y))
                samples += 1
                if not witness.satisfies_estimate(Fk.context.p, Fk.context.precision):
                    violations += 1

    reporter.add_summary("residue periodic points", residue_count)
    reporter.add_summary("lifted periodic points", len(lifted))
    reporter.add_summary("bijection", residue_count == len(lifted))
    reporter.add_summary("contraction samples", samples)
    reporter.add_summary("contraction violations", violations)
    return reporter


def perturb(rng, point):
    """A random point of the residue disc of ``point``."""
    context = point[0].context
    shift = rng.randrange(1, context.precision + 1)

    def noise():
        return context.element(
            tuple(
                context.p ** shift * rng.randrange(context.order)
                for _ in range(context.k)
            )
        )

    return tuple(x + noise() for x in point)


@experiment("tate-voloch")
def tate_voloch(config, budget=None, override_restricted=False):
    report = tate_voloch_scan(
        config.build_map(),
        config.build_variety(),
        config.degrees,
        config.max_period,
        override=override_restricted,
        budget=budget,
    )
    reporter = TSVReporter("tate-voloch", config)
    reporter.columns = ["degree", "period", "point", "valuation", "status"]
    for row in report.rows:
        reporter.add(row.degree, row.period, row.point, row.valuation, row.status)

    reporter.add_summary("points", len(report.rows))
    reporter.add_summary("off-V", len(report.finite_valuations))
    reporter.add_summary("suspect", len(report.suspect))
    reporter.add_summary(
        "M_observed", "none" if report.m_observed is None else report.m_observed
    )
    reporter.add_summary("epsilon", report.epsilon)
    return reporter


@experiment("manin-mumford")
def manin_mumford(config, budget=None, override_restricted=False):
    report = manin_mumford_scan(
        config.build_map(),
        config.build_variety(),
        config.degrees,
        invariance_power=config.invariance_power,
        override=override_restricted,
        budget=budget,
    )
    reporter = TSVReporter("manin-mumford", config)
    reporter.columns = ["degree", "variety_points", "periodic_on_V", "lifted_on_V"]
    for row in report.rows:
        reporter.add(
            row.degree,
            row.variety_points,
            row.periodic_on_variety,
            row.lifted_on_variety,
        )
    reporter.add_summary("strictly increasing", report.strictly_increasing)
    reporter.add_summary("verified", report.verified)
    return reporter


@experiment("stability")
def stability(config, budget=None, override_restricted=False):
    require(config, "point")
    report = eventual_stability_probe(
        config.build_map().reduce(),
        config.base_point(),
        config.n_max,
        config.degree_bound,
        budget=budget,
    )
    reporter = TSVReporter("stability", config)
    reporter.columns = ["n", "preimages", "orbits", "degree"]
    for row in report.rows:
        reporter.add(row.n, row.preimages, row.orbits, row.degree)
    reporter.add_summary("verdict", report.verdict)
    return reporter


@experiment("backward-orbit")
def backward_orbit(config, budget=None, override_restricted=False):
    require(config, "point")
    residue_map = config.build_map().reduce()
    orbit = coherent_backward_orbit_search(
        residue_map,
        config.base_point(),
        config.build_variety().reduce(),
        depth=config.depth,
        degree_bound=config.degree_bound,
        lookahead=config.lookahead,
        budget=budget,
    )
    reporter = TSVReporter("backward-orbit", config)
    reporter.columns = ["index", "point", "hit"]
    for index, point in enumerate(orbit.points):
        reporter.add(index, render_point(point), index in orbit.hits)

    progression = hit_progression(orbit)
    reporter.add_summary("hits", ",".join(str(i) for i in orbit.hits) or "none")
    reporter.add_summary("degree", orbit.degree)
    reporter.add_summary("coherent", orbit.is_coherent(residue_map))
    reporter.add_summary(
        "progression",
        None if progression is None else "%d+%dt" % progression,
    )
    return reporter


@experiment("gauss-norm")
def gauss_norm_report(config, budget=None, override_restricted=False):
    require(config, "varieties")
    reporter = TSVReporter("gauss-norm", config)
    reporter.columns = ["generator", "gauss_norm", "rank2_val"]
    for text, polynomial in zip(config.varieties, config.variety_polynomials()):
        value = rank2_val(polynomial) if polynomial.nvars == 1 else None
        reporter.add(text, gauss_norm(polynomial), value)
    reporter.add_summary("generators", len(reporter.rows))
    return reporter


def run(subcommand, config, budget=None, override_restricted=False):
    """Runs ``subcommand`` on ``config`` and returns its reporter."""
    try:
        runner = EXPERIMENTS[subcommand]
    except KeyError:
        raise ConfigError(
            "unknown experiment '%s' (choose from %s)"
            % (subcommand, ", ".join(sorted(EXPERIMENTS)))
        )
    logger.info("Running %s", subcommand)
    return runner(config, budget=budget, override_restricted=override_restricted)
