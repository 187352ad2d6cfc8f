#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import math
import warnings

import numpy as np
import pytest

import pantsurfaces as ps
from pantsurfaces.hextree import (
    brute_force_census,
    branch_counts,
    growth_bound,
    orbit_distances,
    counts_on_grid,
    CollisionGuard,
    )


def setup_function(fn):
    warnings.simplefilter('always')

def two_rho(a):
    return ps.build_hexagon(a).adjacent_midpoint_distance

def test_reduced_word():
    assert ps.ReducedWord((0, 1, 0, 2)) == (0, 1, 0, 2)
    assert ps.ReducedWord() == ()
    with pytest.raises(ps.PantsOrbitError):
        ps.ReducedWord((0, 0))
    with pytest.raises(ps.PantsOrbitError):
        ps.ReducedWord((1, 3))

def test_small_balls():
    for a in (1.0, 2.0, 4.0):
        assert ps.count(a, 0.0) == 1
        assert ps.count(a, 0.5 * two_rho(a)) == 1
        assert ps.count(a, two_rho(a)) == 4

def test_negative_radius():
    with pytest.raises(ps.PantsOrbitError):
        ps.count(2.0, -1.0)
    with pytest.raises(ps.PantsOrbitError):
        list(ps.enumerate_orbit(2.0, -1.0))

def test_oracle_agreement():
    for a in (1.0, 2.0, 4.0):
        limit = ps.brute_force_radius(a, 8)
        assert limit > two_rho(a)
        for R in np.linspace(0.0, 0.999 * limit, 12):
            assert ps.count(a, R) == ps.brute_force_count(a, 8, R)

def test_oracle_limits():
    with pytest.raises(ps.PantsOrbitError):
        ps.brute_force_count(2.0, 15, 1.0)
    with pytest.raises(ps.PantsOrbitError):
        brute_force_census(2.0, -1)

def test_census_is_free():
    for a in (0.5, 2.0, 8.0):
        raw, distinct = brute_force_census(a, 6)
        assert raw == distinct == 1 + 3 * (2 ** 6 - 1)

def test_slack_does_not_change_count():
    for a, R in ((1.0, 7.3), (2.0, 6.1), (4.0, 4.9)):
        assert ps.count(a, R, slack=2.0) == ps.count(a, R)

def test_permutation_invariance():
    for a, R in ((1.0, 7.3), (4.0, 4.9)):
        expected = ps.count(a, R)
        for permutation in ((1, 2, 0), (2, 1, 0)):
            assert ps.count(a, R, permutation=permutation) == expected
    with pytest.raises(ps.PantsOrbitError):
        ps.count(2.0, 3.0, permutation=(0, 0, 1))

def test_branches_are_symmetric():
    for a, R in ((1.0, 7.3), (2.0, 6.1), (4.0, 4.9)):
        b0, b1, b2 = branch_counts(a, R)
        assert b0 == b1 == b2
        assert ps.count(a, R) == 1 + b0 + b1 + b2

def test_parallel_count():
    assert ps.count(2.0, 6.1, workers=2) == ps.count(2.0, 6.1)

def test_subtree_identity():
    for a in (1.0, 2.0):
        for word in ((0,), (1, 2), (2, 0, 1)):
            for s in (3.1, 4.7):
                assert 3 * ps.subtree_count(a, word, s) == \
                    1 + 2 * ps.count(a, s)

def test_growth_bound():
    for a in (0.5, 2.0, 8.0):
        assert growth_bound(a, 0.0) == 1
        assert growth_bound(a, two_rho(a)) == 4
        for R in (3.0, 5.5):
            assert ps.count(a, R) <= growth_bound(a, R)

def test_count_cap():
    with pytest.raises(ps.PantsCountCapError):
        ps.count(4.0, 8.0, cap=10)

def test_count_at_large_radius():
    a = 2.0
    b0, b1, b2 = branch_counts(a, 16.0)
    total = 1 + b0 + b1 + b2
    assert b0 == b1 == b2
    assert ps.count(a, 15.0) < total <= growth_bound(a, 16.0)

def test_collision_guard():
    guard = CollisionGuard()
    guard.add((0.0, 0.0, 1.0), ())
    guard.add(ps.renormalize_point((0.5, 0.0, 1.0)), (0,))
    assert len(guard) == 2
    # same cell, then the cell next door
    with pytest.raises(ps.PantsOrbitCollisionError):
        guard.add((0.0, 0.0, 1.0), (1, 0))
    with pytest.raises(ps.PantsOrbitCollisionError):
        guard.add((0.9e-6, 0.0, 1.0), (2, 1))
    assert len(guard) == 2

def test_count_without_collision_check():
    for a, R in ((1.0, 7.3), (4.0, 4.9)):
        assert ps.count(a, R, check_collisions=False) == ps.count(a, R)
    assert ps.count(2.0, 6.1, workers=2, check_collisions=False) == \
        ps.count(2.0, 6.1)

def test_enumerate_orbit():
    a, R = 2.0, 5.0
    points = list(ps.enumerate_orbit(a, R))
    assert len(points) == ps.count(a, R)
    assert len({p.word for p in points}) == len(points)
    empty = [p for p in points if p.word == ()]
    assert len(empty) == 1 and empty[0].dist == pytest.approx(0.0, abs=1e-9)
    hexagon = ps.build_hexagon(a)
    for p in points:
        assert p.dist <= R + 1e-9
        assert ps.dist(hexagon.center, p.point) == pytest.approx(p.dist, abs=1e-8)
        if p.word:
            assert p.dist >= hexagon.adjacent_midpoint_distance - 1e-9

def test_orbit_distances():
    distances = orbit_distances(2.0, 5.0)
    assert np.all(np.diff(distances) >= 0)
    assert len(distances) == ps.count(2.0, 5.0)
    assert list(counts_on_grid(distances, [0.0, 5.0])) == [1, len(distances)]

def test_fit_delta_synthetic():
    radii = np.arange(5.0, 15.25, 0.5)
    counts = [(r, int(math.floor(math.exp(0.5 * r)))) for r in radii]
    with warnings.catch_warnings(record=True) as w:
        estimate = ps.fit_delta(counts)
        assert len(w) == 0
    assert estimate.delta == pytest.approx(0.5, abs=0.01)
    assert estimate.r_window == (5.0, 15.0)
    assert estimate.instability < 0.1

def test_fit_delta_unstable():
    radii = np.arange(5.0, 15.25, 0.5)
    counts = [
        (r, int(round(100 * math.exp(
            0.2 * r if r <= 10 else 2.0 + 0.6 * (r - 10.0)))))
        for r in radii
        ]
    with warnings.catch_warnings(record=True) as w:
        estimate = ps.fit_delta(counts)
        assert len(w) == 1
        assert issubclass(w[0].category, ps.PantsFitWarning)
    assert estimate.instability > 0.1

def test_fit_delta_invalid():
    with pytest.raises(ps.PantsFitError):
        ps.fit_delta([(1.0, 1), (2.0, 2), (3.0, 4)])
    with pytest.raises(ps.PantsFitError):
        ps.fit_delta([(r, 10 - r) for r in range(6)])

def test_estimate_delta_window():
    with pytest.raises(ps.PantsFitError):
        ps.estimate_delta(2.0, R_min=5.0, R_max=6.0, step=0.5)
    with pytest.raises(ps.PantsFitError):
        ps.estimate_delta(2.0, R_min=0.5, R_max=3.0, step=0.25)

def test_estimate_delta():
    with warnings.catch_warnings(record=True):
        estimate = ps.estimate_delta(2.0)
    assert 0 < estimate.delta < 1
    assert estimate.a == 2.0
    assert estimate.counts[-1][1] >= 1000
    values = [n for _, n in estimate.counts]
    assert values == sorted(values)
    assert estimate.to_dict()['delta'] == estimate.delta

@pytest.mark.slow
def test_delta_increases_with_side_length():
    with warnings.catch_warnings(record=True):
        deltas = [ps.estimate_delta(a).delta for a in (0.5, 1.0, 2.0, 4.0, 8.0)]
    assert all(0 < d < 1 for d in deltas)
    assert deltas == sorted(deltas)
    assert len(set(deltas)) == len(deltas)

@pytest.mark.slow
def test_deep_oracle_agreement():
    for a in (1.0, 2.0, 4.0):
        limit = ps.brute_force_radius(a, 12)
        for R in np.linspace(0.0, 0.999 * limit, 25):
            assert ps.count(a, R) == ps.brute_force_count(a, 12, R)

def test_estimate_delta_small_and_large_sides():
    for a in (0.5, 4.0, 8.0):
        with warnings.catch_warnings(record=True):
            estimate = ps.estimate_delta(a)
        assert 0 < estimate.delta < 1
        values = [n for _, n in estimate.counts]
        assert values == sorted(values)
        assert values[-1] <= growth_bound(a, estimate.counts[-1][0])
