#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains the hyperboloid model of the hyperbolic plane.

"""
Points, geodesics and isometries of the hyperbolic plane in the hyperboloid
model.

Points are vectors of :math:`\\mathbb{R}^{2,1}` with ``<p,p> = -1`` and a
positive last coordinate, where ``<.,.>`` is the Minkowski form of signature
``diag(1, 1, -1)``. A geodesic is represented by its pole: a spacelike unit
vector ``n``, the geodesic being ``{p : <p,n> = 0}``. Isometries (including
reflections and other orientation-reversing maps) are 3x3 matrices ``m`` with
``m^T J m = J`` and ``m[2][2] > 0``.

All objects are immutable once constructed, so they can be shared freely
between worker processes.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import math

import numpy as np

from pantsurfaces.errors import (
    PantsGeometryError,
    PantsInvalidPointError,
    PantsCoincidentPointsError,
    PantsDriftError,
    )
from pantsurfaces.const import (
    POINT_TOLERANCE,
    ISOMETRY_TOLERANCE,
    DRIFT_LIMIT,
    ARCCOSH_SLACK,
    KEY_GRID,
    )


# When set, every object built by an operation is validated as if it had been
# constructed by hand; this is slow and only meant for debugging
CHECK_INVARIANTS = False

J = np.diag([1.0, 1.0, -1.0])
J.setflags(write=False)


def _coords(v):
    return getattr(v, 'coords', v)


def mink(p, q):
    """
    Return the Minkowski product ``p1*q1 + p2*q2 - p3*q3`` of two vectors.

    Either argument may be a :class:`Point`, a :class:`GeodesicPole` or any
    3-sequence of reals.
    """
    p = _coords(p)
    q = _coords(q)
    return float(p[0] * q[0] + p[1] * q[1] - p[2] * q[2])


def _scale(v):
    # Roundoff in <v,v> grows with the square of the coordinates, so the
    # membership tolerances are relative to it
    return max(1.0, float(np.abs(v).max()) ** 2)


class Point(object):
    """
    A point of the hyperbolic plane.

    .. attribute:: coords

        Read-only numpy array ``(x1, x2, x3)`` with ``x1**2 + x2**2 - x3**2 =
        -1`` and ``x3 > 0``.
    """

    __slots__ = ('coords',)

    def __init__(self, coords, check=True):
        coords = np.array(coords, dtype=float)
        if coords.shape != (3,):
            raise PantsInvalidPointError(
                'a point needs 3 coordinates, not %r' % (coords.shape,))
        if check or CHECK_INVARIANTS:
            if coords[2] <= 0:
                raise PantsInvalidPointError(
                    'point %r lies on the lower sheet' % (coords,))
            if abs(mink(coords, coords) + 1.0) > POINT_TOLERANCE * _scale(coords):
                raise PantsInvalidPointError(
                    'point %r is not on the hyperboloid' % (coords,))
        coords.setflags(write=False)
        self.coords = coords

    @property
    def x1(self):
        return float(self.coords[0])

    @property
    def x2(self):
        return float(self.coords[1])

    @property
    def x3(self):
        return float(self.coords[2])

    def __iter__(self):
        return iter(self.coords.tolist())

    def __repr__(self):
        return '<Point (%.12g, %.12g, %.12g)>' % tuple(self.coords)


class GeodesicPole(object):
    """
    The pole of a geodesic: a spacelike unit vector ``n``, the geodesic being
    the set of points orthogonal to it.

    The sign of ``n`` selects a side: ``{p : <p,n> > 0}`` is "beyond" the
    geodesic.
    """

    __slots__ = ('coords',)

    def __init__(self, coords, check=True):
        coords = np.array(coords, dtype=float)
        if coords.shape != (3,):
            raise PantsGeometryError(
                'a pole needs 3 coordinates, not %r' % (coords.shape,))
        if check or CHECK_INVARIANTS:
            if abs(mink(coords, coords) - 1.0) > POINT_TOLERANCE * _scale(coords):
                raise PantsGeometryError(
                    'pole %r is not a spacelike unit vector' % (coords,))
        coords.setflags(write=False)
        self.coords = coords

    @property
    def n1(self):
        return float(self.coords[0])

    @property
    def n2(self):
        return float(self.coords[1])

    @property
    def n3(self):
        return float(self.coords[2])

    def __neg__(self):
        return GeodesicPole(-self.coords, check=False)

    def __iter__(self):
        return iter(self.coords.tolist())

    def __repr__(self):
        return '<GeodesicPole (%.12g, %.12g, %.12g)>' % tuple(self.coords)


def lorentz_deviation(m):
    """
    Return ``max |m^T J m - J|`` relative to the squared entry scale of *m*.
    """
    m = np.asarray(m, dtype=float)
    return float(np.abs(m.T @ J @ m - J).max()) / _scale(m)


class Isometry(object):
    """
    An isometry of the hyperbolic plane, possibly orientation-reversing.

    Isometries compose with ``@`` and act on points and poles with ``@`` too::

        >>> g = translate_x(1.5) @ rotate_o(math.pi / 2)
        >>> dist(ORIGIN, g @ ORIGIN)
        1.5

    .. attribute:: m

        Read-only 3x3 numpy array satisfying ``m^T J m = J``.

    .. attribute:: det_sign

        ``+1`` for orientation-preserving isometries, ``-1`` otherwise.
    """

    __slots__ = ('m', 'det_sign')

    def __init__(self, m, det_sign=None, check=True):
        m = np.array(m, dtype=float)
        if m.shape != (3, 3):
            raise PantsGeometryError(
                'an isometry needs a 3x3 matrix, not %r' % (m.shape,))
        if check or CHECK_INVARIANTS:
            if lorentz_deviation(m) > ISOMETRY_TOLERANCE:
                raise PantsGeometryError(
                    'matrix does not preserve the Minkowski form '
                    '(deviation %g)' % lorentz_deviation(m))
            if m[2, 2] <= 0:
                raise PantsGeometryError(
                    'matrix swaps the sheets of the hyperboloid')
            det_sign = None
        if det_sign is None:
            det_sign = 1 if np.linalg.det(m) > 0 else -1
        m.setflags(write=False)
        self.m = m
        self.det_sign = det_sign

    @classmethod
    def identity(cls):
        return cls(np.eye(3), det_sign=1, check=False)

    def inverse(self):
        """
        Return the inverse isometry ``J m^T J``.
        """
        return Isometry(J @ self.m.T @ J, det_sign=self.det_sign, check=False)

    def __matmul__(self, other):
        if isinstance(other, Isometry):
            return Isometry(
                self.m @ other.m, det_sign=self.det_sign * other.det_sign,
                check=False)
        elif isinstance(other, Point):
            return Point(self.m @ other.coords, check=False)
        elif isinstance(other, GeodesicPole):
            return GeodesicPole(self.m @ other.coords, check=False)
        return NotImplemented

    def __repr__(self):
        return '<Isometry det=%+d %s>' % (
            self.det_sign, np.array2string(self.m, precision=6))


ORIGIN = Point((0.0, 0.0, 1.0))


def dist(p, q):
    """
    Return the hyperbolic distance ``arccosh(-<p,q>)`` between two points.

    Arguments of arccosh slightly below 1 (roundoff on coincident points) are
    read as 1; anything further below means the inputs were not points.
    """
    x = -mink(p, q)
    if x < 1.0 - ARCCOSH_SLACK * max(1.0, abs(p.coords[2] * q.coords[2])):
        raise PantsInvalidPointError(
            'arccosh argument %.12g < 1; inputs are not valid points' % x)
    return math.acosh(max(x, 1.0))


def dist_to_geodesic(p, n):
    """
    Return the distance ``arcsinh(|<p,n>|)`` from point *p* to the geodesic
    with pole *n*.
    """
    return math.asinh(abs(mink(p, n)))


def dist_to_segment(p, u, w):
    """
    Return the distance from point *p* to the geodesic segment between the
    points *u* and *w*.
    """
    n = geodesic_through(u, w)
    s = mink(p, n)
    foot = Point(
        (p.coords - s * n.coords) / math.sqrt(1.0 + s * s), check=False)
    span = dist(u, w)
    if dist(u, foot) + dist(foot, w) <= span + 1e-9 * max(1.0, span):
        return math.asinh(abs(s))
    return min(dist(p, u), dist(p, w))


def translate_x(t):
    """
    Return the translation by *t* along the geodesic ``{x2 = 0}``.
    """
    c, s = math.cosh(t), math.sinh(t)
    return Isometry(
        ((c, 0.0, s), (0.0, 1.0, 0.0), (s, 0.0, c)), det_sign=1, check=False)


def rotate_o(theta):
    """
    Return the rotation by *theta* about :data:`ORIGIN`.
    """
    c, s = math.cos(theta), math.sin(theta)
    return Isometry(
        ((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0)), det_sign=1, check=False)


def reflection(n):
    """
    Return the reflection ``p -> p - 2<p,n>n`` in the geodesic with pole *n*.
    """
    n = _coords(n)
    m = np.eye(3) - 2.0 * np.outer(n, J @ n)
    return Isometry(m, det_sign=-1, check=False)


def geodesic_through(p, q, reference=ORIGIN):
    """
    Return the pole of the geodesic through the points *p* and *q*.

    The sign is chosen so that *reference* lies on the negative side,
    ``<reference, n> < 0``. When *reference* is on the geodesic itself the
    first non-zero coordinate of the pole is made positive.
    """
    if dist(p, q) < POINT_TOLERANCE:
        raise PantsCoincidentPointsError(
            'geodesic through coincident points %r and %r' % (p, q))
    v = J @ np.cross(p.coords, q.coords)
    v = v / math.sqrt(mink(v, v))
    side = mink(reference, v)
    if abs(side) > POINT_TOLERANCE:
        if side > 0:
            v = -v
    else:
        lead = v[np.flatnonzero(np.abs(v) > POINT_TOLERANCE)[0]]
        if lead < 0:
            v = -v
    return GeodesicPole(v, check=False)


def translate_to(p):
    """
    Return the translation taking :data:`ORIGIN` to the point *p* along the
    geodesic joining them.

    Only the first two coordinates of *p* are read, so the result is an exact
    Lorentz matrix even far from the origin.
    """
    x, y = (float(t) for t in _coords(p)[:2])
    z = math.sqrt(1.0 + x * x + y * y)
    k = 1.0 / (1.0 + z)
    return Isometry(
        ((1.0 + k * x * x, k * x * y, x),
         (k * x * y, 1.0 + k * y * y, y),
         (x, y, z)),
        det_sign=1, check=False)


def renormalize_point(v):
    """
    Return the numpy array *v* pulled back onto the upper sheet of the
    hyperboloid by recomputing its last coordinate from the first two.
    """
    v = np.asarray(_coords(v), dtype=float)
    if not (np.all(np.isfinite(v)) and v[2] > 0):
        raise PantsDriftError('vector %r has left the hyperboloid' % (v,))
    return np.array((v[0], v[1], math.sqrt(1.0 + v[0] ** 2 + v[1] ** 2)))


def _gram_schmidt(m):
    c3 = m[:, 2]
    norm3 = -mink(c3, c3)
    if not norm3 > 0:
        raise PantsDriftError('third column of %r is not timelike' % (m,))
    c3 = c3 / math.sqrt(norm3)
    c1 = m[:, 0] + mink(m[:, 0], c3) * c3
    norm1 = mink(c1, c1)
    if not norm1 > 0:
        raise PantsDriftError('first column of %r is not spacelike' % (m,))
    c1 = c1 / math.sqrt(norm1)
    c2 = m[:, 1] + mink(m[:, 1], c3) * c3 - mink(m[:, 1], c1) * c1
    norm2 = mink(c2, c2)
    if not norm2 > 0:
        raise PantsDriftError('second column of %r is not spacelike' % (m,))
    return np.column_stack((c1, c2 / math.sqrt(norm2), c3))


def _cartan(m, det_sign):
    # m = T(p) K with T(p) the translation to p = m O and K fixing O; the
    # bottom row of m is p^T K, which gives K from p without cancellation
    x, y = m[0, 2], m[1, 2]
    w = m[2, :2]
    r = math.hypot(x, y)
    if abs(math.hypot(w[0], w[1]) - r) > DRIFT_LIMIT * r:
        raise PantsDriftError(
            'isometry drifted too far from the Lorentz group')
    alpha = math.atan2(y, x)
    beta = math.atan2(w[1], w[0])
    if det_sign > 0:
        c, s = math.cos(alpha - beta), math.sin(alpha - beta)
        k = ((c, -s, 0.0), (s, c, 0.0), (0.0, 0.0, 1.0))
    else:
        c, s = math.cos(alpha + beta), math.sin(alpha + beta)
        k = ((c, s, 0.0), (s, -c, 0.0), (0.0, 0.0, 1.0))
    return translate_to((x, y)).m @ np.array(k)


def renormalize(g):
    """
    Return *g* with its matrix pulled back onto the Lorentz group.

    Near the origin this is Gram-Schmidt with respect to the Minkowski form
    on the columns, the timelike third column first. Further out the matrix
    is rebuilt as the translation to its image of the origin followed by the
    rotation (or reflection, following :attr:`~Isometry.det_sign`) read off
    its bottom row, which keeps full relative precision however large the
    entries. Raises :exc:`~pantsurfaces.PantsDriftError` when the input has
    drifted beyond repair.
    """
    m = g.m
    if not np.all(np.isfinite(m)):
        raise PantsDriftError('isometry has non-finite entries')
    deviation = lorentz_deviation(m)
    if deviation > DRIFT_LIMIT:
        raise PantsDriftError(
            'isometry drifted too far from the Lorentz group '
            '(deviation %g)' % deviation)
    if not m[2, 2] > 0:
        raise PantsDriftError('isometry swaps the sheets of the hyperboloid')
    if math.hypot(m[0, 2], m[1, 2]) < 1.0:
        fixed = _gram_schmidt(m)
    else:
        fixed = _cartan(m, g.det_sign)
    return Isometry(fixed, det_sign=g.det_sign, check=False)


def isometry_key(g, grid=KEY_GRID):
    """
    Return a hashable key of *g*: its entries rounded to multiples of *grid*,
    followed by its determinant sign.
    """
    return tuple(np.rint(g.m.ravel() / grid).astype(np.int64).tolist()) + (
        g.det_sign,)


def point_key(p, grid=KEY_GRID):
    """
    Return a hashable key of point *p* (a :class:`Point` or a 3-vector): its
    coordinates rounded to multiples of *grid*.
    """
    return tuple(
        np.rint(np.asarray(_coords(p)) / grid).astype(np.int64).tolist())
