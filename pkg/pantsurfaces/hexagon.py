#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains the symmetric right-angled hexagon and its reflections.

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import math
import logging
import functools
from collections import namedtuple
from itertools import combinations

import numpy as np

from pantsurfaces.errors import (
    PantsHexagonError,
    PantsClosureError,
    PantsCenterError,
    )
from pantsurfaces.geometry import (
    J,
    ORIGIN,
    Isometry,
    Point,
    mink,
    dist,
    dist_to_geodesic,
    geodesic_through,
    reflection,
    renormalize,
    rotate_o,
    renormalize_point,
    translate_to,
    translate_x,
    )


logger = logging.getLogger(__name__)

CLOSURE_TOLERANCE = 1e-9


PantsConstants = namedtuple(
    'PantsConstants', ('adjacent_midpoint_distance', 'eccentricity_bound'))


def alternate_side(a):
    """
    Return the length *b* of the sides between the three sides of length *a*
    in the symmetric right-angled hexagon, ``cosh b = cosh a / (cosh a - 1)``.

    The value is computed through the equivalent ``sinh(b/2) = 1 / (2
    sinh(a/2))`` which keeps full precision when *b* is small.
    """
    if not a > 0 or math.isinf(a):
        raise PantsHexagonError(
            'side length must be positive and finite, not %r' % (a,))
    return 2.0 * math.asinh(0.5 / math.sinh(0.5 * a))


class Hexagon(object):
    """
    The right-angled hexagon whose three alternating sides all have length
    :attr:`a`.

    Instances are built with :meth:`build` (or :func:`build_hexagon`, which
    caches them) and are immutable afterwards. Side ``i`` runs from vertex
    ``i`` to vertex ``i + 1``; the a-sides are the even sides, so a-side
    ``j`` (the side glued along leg ``j`` of a pants) runs from vertex ``2j``
    to vertex ``2j + 1``. All six poles point away from the interior.

    .. attribute:: a

        Length of the three alternating gluing sides.

    .. attribute:: b

        Length of the other three sides.

    .. attribute:: vertices

        The six vertices, in counter-clockwise traversal order.

    .. attribute:: a_poles

        Poles of the a-sides (sides 0, 2 and 4).

    .. attribute:: b_poles

        Poles of the b-sides (sides 1, 3 and 5).

    .. attribute:: center

        The incenter, at equal distance :attr:`inradius_a` from the a-sides.
        This is the midpoint of the pants built from the hexagon and the
        basepoint of every distance count.

    .. attribute:: reflections

        The reflections in the three a-sides, generators of the reflection
        group whose orbit of :attr:`center` is counted by
        :mod:`pantsurfaces.hextree`.

    .. attribute:: rotations

        The powers ``sigma**0, sigma**1, sigma**2`` of the order-3 rotation
        about :attr:`center` carrying a-side ``j`` to a-side ``j + 1``.
    """

    def __init__(self, a, b, vertices, a_poles, b_poles, center, rotation,
                 closure):
        self.a = a
        self.b = b
        self.vertices = tuple(vertices)
        self.a_poles = tuple(a_poles)
        self.b_poles = tuple(b_poles)
        self.center = center
        self.closure = closure
        self.inradius_a = dist_to_geodesic(center, a_poles[0])
        self.inradius_b = dist_to_geodesic(center, b_poles[0])
        self.reflections = tuple(reflection(n) for n in self.a_poles)
        square = renormalize(rotation @ rotation)
        self.rotations = (Isometry.identity(), rotation, square)
        # Crossing a-side j into a neighbour whose own side k is glued there
        self._gluing = tuple(
            tuple(
                renormalize(self.reflections[j] @ self.rotations[(j - k) % 3])
                for k in range(3)
                )
            for j in range(3)
            )

    @classmethod
    def build(cls, a):
        """
        Construct the hexagon with alternating side length *a* by a turtle
        walk: starting at the identity frame, record the vertex, move forward
        along the side, and turn left by a right angle, six times.

        The walk is then translated so that the incenter lands on
        :data:`~pantsurfaces.geometry.ORIGIN`.
        """
        b = alternate_side(a)
        frame = Isometry.identity()
        scale = 1.0
        vertices = []
        for side in (a, b, a, b, a, b):
            vertices.append(frame @ ORIGIN)
            frame = frame @ translate_x(side) @ rotate_o(0.5 * math.pi)
            scale = max(scale, float(np.abs(frame.m).max()))
        # The frame entries grow like cosh(a); roundoff in the closing
        # product is measured relative to them
        closure = float(np.abs(frame.m - np.eye(3)).max()) / scale
        if closure > CLOSURE_TOLERANCE:
            raise PantsClosureError(
                'turtle walk does not close for a=%r (residual %g)' %
                (a, closure))

        total = sum(v.coords for v in vertices)
        inside = Point(total / math.sqrt(-mink(total, total)), check=False)
        a_poles = [
            geodesic_through(vertices[2 * j], vertices[2 * j + 1], inside)
            for j in range(3)
            ]
        n1, n2, n3 = (n.coords for n in a_poles)
        c = J @ np.cross(n1 - n2, n2 - n3)
        norm = -mink(c, c)
        if not norm > 0:
            raise PantsCenterError(
                'no point is equidistant from the a-sides for a=%r' % (a,))
        c = c / math.sqrt(norm)
        if c[2] < 0:
            c = -c

        back = translate_to(c).inverse()
        vertices = [
            Point(renormalize_point(back.m @ v.coords), check=False)
            for v in vertices
            ]
        center = ORIGIN
        a_poles = [
            geodesic_through(vertices[2 * j], vertices[2 * j + 1], center)
            for j in range(3)
            ]
        b_poles = [
            geodesic_through(vertices[2 * j + 1], vertices[(2 * j + 2) % 6],
                             center)
            for j in range(3)
            ]
        for n in a_poles + b_poles:
            if not mink(center, n) < 0:
                raise PantsCenterError(
                    'incenter lies outside the hexagon for a=%r' % (a,))

        # sigma fixes the center and carries vertex 0 to vertex 2
        u, w = vertices[0].coords, vertices[2].coords
        turn = math.atan2(u[0] * w[1] - u[1] * w[0], u[0] * w[0] + u[1] * w[1])
        rotation = rotate_o(math.copysign(2.0 * math.pi / 3.0, turn))
        logger.debug(
            'built hexagon a=%g b=%g closure=%g', a, b, closure)
        return cls(a, b, vertices, a_poles, b_poles, center, rotation, closure)

    def gluing(self, j, k):
        """
        Return the frame change ``r_j . sigma**((j - k) mod 3)`` that develops
        a neighbouring hexagon across a-side *j*, when the neighbour is glued
        along its own a-side *k*.

        The neighbour's frame is ``frame @ hexagon.gluing(j, k)``. Its center
        is the mirror image of this center across side *j*, so the two
        midpoints are as close as possible and the gluing has no twist.
        """
        return self._gluing[j][k]

    @property
    def adjacent_midpoint_distance(self):
        return 2.0 * self.inradius_a

    def residuals(self):
        """
        Return a dict of invariant residuals: turtle closure, right angles,
        the side identity ``cosh b (cosh a - 1) = cosh a``, the spread of the
        distances from the center to the a-sides, and the order of the
        rotation.
        """
        poles = [None] * 6
        poles[0::2] = self.a_poles
        poles[1::2] = self.b_poles
        angles = max(
            abs(mink(poles[i], poles[(i + 1) % 6])) for i in range(6))
        ch = math.cosh(self.a)
        identity = abs(math.cosh(self.b) * (ch - 1.0) - ch) / ch
        offsets = [abs(mink(self.center, n)) for n in self.a_poles]
        cube = self.rotations[2] @ self.rotations[1]
        return {
            'closure': self.closure,
            'angles': angles,
            'side_identity': identity,
            'inradius_spread': max(offsets) - min(offsets),
            'rotation_order': float(np.abs(cube.m - np.eye(3)).max()),
            }

    def to_dict(self):
        return {
            'a': self.a,
            'b': self.b,
            'inradius_a': self.inradius_a,
            'inradius_b': self.inradius_b,
            'center': list(self.center),
            'vertices': [list(v) for v in self.vertices],
            'a_poles': [list(n) for n in self.a_poles],
            'b_poles': [list(n) for n in self.b_poles],
            'residuals': self.residuals(),
            }

    def __repr__(self):
        return '<Hexagon a=%g b=%g inradius=%g>' % (
            self.a, self.b, self.inradius_a)


@functools.lru_cache(maxsize=64)
def build_hexagon(a):
    """
    Return the (cached) :class:`Hexagon` with alternating side length *a*.
    """
    return Hexagon.build(float(a))


def pants_constants(a):
    """
    Return the :class:`PantsConstants` of the pants built from two copies of
    the hexagon: the distance between the midpoints of two adjacent pants,
    and a certified bound on the distance from any point of a pants to its
    midpoint.
    """
    hexagon = build_hexagon(a)
    reach = max(dist(hexagon.center, v) for v in hexagon.vertices)
    span = max(dist(u, v) for u, v in combinations(hexagon.vertices, 2))
    return PantsConstants(
        adjacent_midpoint_distance=hexagon.adjacent_midpoint_distance,
        eccentricity_bound=reach + span)
