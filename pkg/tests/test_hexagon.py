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


def setup_function(fn):
    warnings.simplefilter('always')

def close(p, q, tol=1e-9):
    p = np.asarray(list(p))
    q = np.asarray(list(q))
    scale = max(1.0, float(np.abs(p).max()), float(np.abs(q).max()))
    return float(np.abs(p - q).max()) <= tol * scale

def test_alternate_side():
    assert 0.013 < ps.alternate_side(10.0) < 0.014
    a = math.acosh(2.0)
    assert ps.alternate_side(a) == pytest.approx(a, abs=1e-12)
    for a in (0.5, 1.0, 2.0, 4.0, 8.0):
        ch = math.cosh(a)
        assert math.cosh(ps.alternate_side(a)) == pytest.approx(ch / (ch - 1.0))

def test_alternate_side_invalid():
    for a in (0.0, -1.0, float('inf'), float('nan')):
        with pytest.raises(ps.PantsHexagonError):
            ps.alternate_side(a)
    with pytest.raises(ps.PantsHexagonError):
        ps.build_hexagon(0.0)

def test_residuals():
    for a in (0.5, 1.0, math.acosh(2.0), 2.0, 4.0):
        residuals = ps.build_hexagon(a).residuals()
        assert residuals['closure'] <= 1e-9
        assert residuals['angles'] <= 1e-8
        assert residuals['side_identity'] <= 1e-10
    for a in (1.0, 2.0, 4.0):
        residuals = ps.build_hexagon(a).residuals()
        assert residuals['inradius_spread'] <= 1e-9
        assert residuals['rotation_order'] <= 1e-8

def test_large_side_closes():
    hexagon = ps.build_hexagon(8.0)
    assert hexagon.closure <= 1e-9
    assert hexagon.b == pytest.approx(ps.alternate_side(8.0))

def test_side_lengths():
    hexagon = ps.build_hexagon(2.0)
    v = hexagon.vertices
    for i in range(6):
        expected = hexagon.a if i % 2 == 0 else hexagon.b
        assert ps.dist(v[i], v[(i + 1) % 6]) == pytest.approx(expected, abs=1e-9)

def test_center_inside():
    for a in (0.5, 2.0, 8.0):
        hexagon = ps.build_hexagon(a)
        for n in hexagon.a_poles + hexagon.b_poles:
            assert ps.mink(hexagon.center, n) < 0
            for v in hexagon.vertices:
                assert ps.mink(v, n) <= 1e-8 * max(1.0, v.x3 * abs(n.n3))

def test_centered_at_origin():
    for a in (0.5, 2.0, 4.0, 8.0):
        hexagon = ps.build_hexagon(a)
        assert close(hexagon.center, ps.ORIGIN, tol=1e-12)
        # a reflection in a geodesic at distance rho from the origin has
        # entries of at most 1 + 2 cosh(rho)^2
        bound = 1.0 + 2.0 * math.cosh(hexagon.inradius_a) ** 2 + 1e-9
        for r in hexagon.reflections:
            assert float(np.abs(r.m).max()) <= bound
        for j in range(3):
            for k in range(3):
                assert float(np.abs(hexagon.gluing(j, k).m).max()) <= bound

def test_reflections_fix_their_side():
    hexagon = ps.build_hexagon(2.0)
    for j, r in enumerate(hexagon.reflections):
        assert r.det_sign == -1
        assert close(r @ hexagon.vertices[2 * j], hexagon.vertices[2 * j])
        assert close(r @ hexagon.vertices[2 * j + 1], hexagon.vertices[2 * j + 1])
        assert ps.dist(hexagon.center, r @ hexagon.center) == pytest.approx(
            hexagon.adjacent_midpoint_distance, abs=1e-9)

def test_rotation_permutes_vertices():
    hexagon = ps.build_hexagon(2.0)
    sigma = hexagon.rotations[1]
    assert sigma.det_sign == 1
    for i in range(6):
        assert close(sigma @ hexagon.vertices[i], hexagon.vertices[(i + 2) % 6])
    assert close(sigma @ hexagon.center, hexagon.center)

def test_gluing_maps_sides():
    hexagon = ps.build_hexagon(2.0)
    v = hexagon.vertices
    for j in range(3):
        for k in range(3):
            g = hexagon.gluing(j, k)
            assert g.det_sign == -1
            assert close(g @ v[2 * k], v[2 * j])
            assert close(g @ v[2 * k + 1], v[2 * j + 1])
            # the neighbouring hexagon lies beyond side j
            assert ps.mink(g @ hexagon.center, hexagon.a_poles[j]) > 0
            assert ps.dist(hexagon.center, g @ hexagon.center) == pytest.approx(
                hexagon.adjacent_midpoint_distance, abs=1e-9)

def test_build_hexagon_cached():
    assert ps.build_hexagon(2.0) is ps.build_hexagon(2.0)
    assert ps.build_hexagon(2) is ps.build_hexagon(2.0)

def test_pants_constants():
    for a in (0.5, 2.0, 8.0):
        hexagon = ps.build_hexagon(a)
        constants = ps.pants_constants(a)
        assert constants.adjacent_midpoint_distance == \
            hexagon.adjacent_midpoint_distance
        assert constants.eccentricity_bound >= max(
            ps.dist(hexagon.center, v) for v in hexagon.vertices)

def test_inradius_large_side():
    # the hexagon degenerates to an ideal triangle of inradius log(3)/2
    hexagon = ps.build_hexagon(30.0)
    assert hexagon.inradius_a == pytest.approx(0.5 * math.log(3.0), abs=1e-6)

def test_to_dict():
    d = ps.build_hexagon(2.0).to_dict()
    assert d['a'] == 2.0
    assert d['b'] == pytest.approx(0.8274, abs=1e-4)
    assert len(d['vertices']) == 6
    assert len(d['a_poles']) == len(d['b_poles']) == 3
    assert set(d['residuals']) == {
        'closure', 'angles', 'side_identity', 'inradius_spread',
        'rotation_order'}
