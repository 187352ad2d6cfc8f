#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains lattice point counting in the tree of hexagons.

"""
Counting the orbit of the hexagon center under the group generated by the
reflections in the three a-sides of the hexagon.

The three a-side mirrors are pairwise ultraparallel, so the group is the free
product of three groups of order 2 and its elements are the reduced words
over the letters 0, 1, 2 (no letter repeated twice in a row). The images of
the hexagon under these words tile the "hextree", and the orbit point of a
word ``v.i`` together with the orbit points of all its extensions lie beyond
the image under ``v`` of mirror ``i``. The enumeration therefore prunes a
branch, exactly, as soon as that image mirror is further than the counting
radius.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import math
import logging
import warnings
import itertools
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from pantsurfaces.errors import (
    PantsOrbitError,
    PantsOrbitCollisionError,
    PantsCountCapError,
    PantsFitError,
    PantsFitWarning,
    )
from pantsurfaces.const import (
    DIST_TOLERANCE,
    KEY_GRID,
    RENORMALIZE_EVERY,
    DEFAULT_COUNT_CAP,
    MAX_ORACLE_LENGTH,
    DELTA_WINDOW,
    DELTA_INSTABILITY,
    )
from pantsurfaces.geometry import (
    J,
    Point,
    dist,
    mink,
    point_key,
    renormalize_point,
    )
from pantsurfaces.hexagon import build_hexagon


logger = logging.getLogger(__name__)


OrbitPoint = namedtuple('OrbitPoint', ('word', 'point', 'dist'))


class ReducedWord(tuple):
    """
    A reduced word over the generators 0, 1, 2: a tuple of letters in which no
    letter follows itself.
    """

    def __new__(cls, letters=()):
        letters = tuple(letters)
        for i, letter in enumerate(letters):
            if letter not in (0, 1, 2):
                raise PantsOrbitError('invalid letter %r' % (letter,))
            if i and letters[i - 1] == letter:
                raise PantsOrbitError(
                    'word %r is not reduced at position %d' % (letters, i))
        return super(ReducedWord, cls).__new__(cls, letters)

    def __repr__(self):
        return 'ReducedWord(%s)' % (tuple.__repr__(tuple(self)),)


class DeltaEstimate(object):
    """
    A least-squares estimate of the critical exponent.

    .. attribute:: delta

        Fitted slope of ``log N(R)`` against ``R``.

    .. attribute:: log_cst

        Fitted intercept, an estimate of the log of the counting constant.

    .. attribute:: r_window

        ``(R_min, R_max)`` of the fit.

    .. attribute:: residual_rms

        Root mean square residual of the fit.

    .. attribute:: instability

        Absolute difference between the slopes fitted on the two halves of
        the window.

    .. attribute:: counts

        The ``(R, N)`` pairs the fit was made on.
    """

    def __init__(self, delta, log_cst, r_window, residual_rms, instability,
                 counts, a=None):
        self.a = a
        self.delta = delta
        self.log_cst = log_cst
        self.r_window = r_window
        self.residual_rms = residual_rms
        self.instability = instability
        self.counts = counts

    def to_dict(self):
        return {
            'a': self.a,
            'delta': self.delta,
            'log_cst': self.log_cst,
            'r_window': list(self.r_window),
            'residual_rms': self.residual_rms,
            'instability': self.instability,
            'counts': [[r, n] for r, n in self.counts],
            }

    def __repr__(self):
        return '<DeltaEstimate delta=%.6f window=[%g, %g]>' % (
            self.delta, self.r_window[0], self.r_window[1])


def _generators(hexagon, permutation=None):
    order = tuple(range(3)) if permutation is None else tuple(permutation)
    if sorted(order) != [0, 1, 2]:
        raise PantsOrbitError('%r is not a permutation of 0, 1, 2' % (order,))
    reflections = [hexagon.reflections[i].m for i in order]
    poles = np.column_stack([hexagon.a_poles[i].coords for i in order])
    return reflections, poles


def _start(reflections, c, root):
    # The walk tracks q = w^-1 c for the word w, so that a child w.i is
    # reached by a single reflection, q -> r_i q
    q = c
    for letter in root:
        q = reflections[letter] @ q
    return q


def _walk(hexagon, R, root=(), last=None, permutation=None, slack=0.0):
    # Depth-first walk over the reduced words extending *root* (whose first
    # letter after the root differs from *last*, when given), yielding
    # (word, q, distance) for every word whose orbit point lies within R of
    # the center. q is the orbit point of the reversed word, which lies at the
    # same distance. Branches are pruned when the mirror they cross is
    # further than R + slack from q
    reflections, poles = _generators(hexagon, permutation)
    c = hexagon.center.coords
    jp = (J @ poles).T
    limit = R + DIST_TOLERANCE
    root = tuple(root)
    if last is None and root:
        last = root[-1]
    stack = [(root, _start(reflections, c, root), last)]
    while stack:
        word, q, last = stack.pop()
        d = math.acosh(max(1.0, -mink(q, c)))
        if d <= limit:
            yield word, q, d
        mirrors = jp @ q
        for i in (2, 1, 0):
            if i == last:
                continue
            if math.asinh(abs(float(mirrors[i]))) > limit + slack:
                continue
            child = reflections[i] @ q
            if (len(word) + 1) % RENORMALIZE_EVERY == 0:
                child = renormalize_point(child)
            stack.append((word + (i,), child, i))


class CollisionGuard(object):
    """
    Records orbit points at the key grid and raises
    :exc:`~pantsurfaces.PantsOrbitCollisionError` when a new point falls in
    the cell of a recorded one or in any of the 26 cells around it.
    """

    _around = tuple(itertools.product((-1, 0, 1), repeat=3))

    def __init__(self, grid=KEY_GRID):
        self.grid = grid
        self._cells = set()

    def __len__(self):
        return len(self._cells)

    def add(self, q, word=None):
        x, y, z = point_key(q, self.grid)
        for dx, dy, dz in self._around:
            if (x + dx, y + dy, z + dz) in self._cells:
                raise PantsOrbitCollisionError(
                    'word %r lands on an orbit point already counted' %
                    (word,))
        self._cells.add((x, y, z))


def enumerate_orbit(a, R, permutation=None, check_collisions=True, slack=0.0):
    """
    Yield an :class:`OrbitPoint` ``(word, point, dist)`` for every reduced
    word whose orbit point lies within distance *R* (inclusive) of the
    hexagon center, the empty word included, each exactly once.

    Raises :exc:`~pantsurfaces.PantsOrbitCollisionError` if two distinct words
    give points within the key grid of each other, which would mean the
    numerics have collapsed.
    """
    if R < 0:
        raise PantsOrbitError('radius must be non-negative, not %r' % (R,))
    hexagon = build_hexagon(a)
    guard = CollisionGuard() if check_collisions else None
    for word, q, d in _walk(hexagon, R, permutation=permutation, slack=slack):
        if guard is not None:
            guard.add(q, word)
        yield OrbitPoint(
            ReducedWord(reversed(word)), Point(q, check=False), d)


def word_length_bound(hexagon, R):
    """
    Return the longest word length whose orbit point can lie within *R* of
    the center.

    The geodesic from the center to the orbit point of a word of length
    ``k >= 1`` crosses ``k`` nested mirrors, two consecutive ones being at
    least the b-side length apart, so its length is at least
    ``2 rho + (k - 1) b``.
    """
    reach = R + DIST_TOLERANCE - hexagon.adjacent_midpoint_distance
    if reach < 0:
        return 0
    return int(math.floor(reach / hexagon.b)) + 1


def growth_bound(a, R):
    """
    Return the census bound ``1 + 3 (2**K - 1)`` on ``count(a, R)`` where K is
    :func:`word_length_bound`.
    """
    k = word_length_bound(build_hexagon(a), R)
    return 1 + 3 * (2 ** k - 1)


def _branch_total(a, R, letter, cap, permutation, slack, guard):
    hexagon = build_hexagon(a)
    total = 0
    for word, q, _ in _walk(hexagon, R, root=(letter,),
                            permutation=permutation, slack=slack):
        if guard is not None:
            guard.add(q, word)
        total += 1
        if total > cap:
            raise PantsCountCapError(
                'count exceeds cap %d at a=%g R=%g' % (cap, a, R))
    return total


def _count_branch(args):
    a, R, letter, cap, permutation, slack, check_collisions = args
    guard = CollisionGuard() if check_collisions else None
    return _branch_total(a, R, letter, cap, permutation, slack, guard)


def branch_counts(a, R, cap=DEFAULT_COUNT_CAP, workers=1, permutation=None,
                  slack=0.0, check_collisions=True):
    """
    Return the three counts of orbit points within *R* whose words start with
    letter 0, 1 and 2 respectively.

    The subtrees are independent; with *workers* above 1 they are counted in
    separate processes. The result does not depend on *workers*. A single
    process checks the three subtrees against each other for collisions;
    separate processes only check each subtree against itself.
    """
    if workers > 1:
        jobs = [
            (a, R, letter, cap, permutation, slack, check_collisions)
            for letter in range(3)
            ]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(_count_branch, jobs))
    guard = None
    if check_collisions:
        guard = CollisionGuard()
        guard.add(build_hexagon(a).center.coords, ())
    return [
        _branch_total(a, R, letter, cap, permutation, slack, guard)
        for letter in range(3)
        ]


def count(a, R, cap=DEFAULT_COUNT_CAP, workers=1, permutation=None,
          slack=0.0, check_collisions=True):
    """
    Return ``N_a(R)``, the number of orbit points within *R* of the center.

    Raises :exc:`~pantsurfaces.PantsCountCapError` if the count would exceed
    *cap*, and :exc:`~pantsurfaces.PantsOrbitCollisionError` if two words
    land on the same point (unless *check_collisions* is off). *slack*
    inflates the pruning threshold, which never changes the result;
    *permutation* relabels the generators, which never changes it either.
    """
    if R < 0:
        raise PantsOrbitError('radius must be non-negative, not %r' % (R,))
    total = 1 + sum(branch_counts(
        a, R, cap=cap, workers=workers, permutation=permutation, slack=slack,
        check_collisions=check_collisions))
    if total > cap:
        raise PantsCountCapError(
            'count exceeds cap %d at a=%g R=%g' % (cap, a, R))
    bound = growth_bound(a, R)
    if total > bound:
        raise PantsOrbitError(
            'count %d at a=%g R=%g exceeds the word census bound %d' %
            (total, a, R, bound))
    logger.debug('N(%g) = %d at a=%g', R, total, a)
    return total


def subtree_count(a, word, s):
    """
    Return the number of orbit points of words extending *word* (itself
    included) within distance *s* of the orbit point of *word*.

    For a non-empty word this is ``1/3 + 2/3 count(a, s)`` by the 3-fold
    symmetry of the hexagon.
    """
    word = ReducedWord(word)
    hexagon = build_hexagon(a)
    # dist(w c, w v c) = dist(c, v c): count the words v that extend w
    # without cancelling its last letter
    last = word[-1] if word else None
    return sum(1 for _ in _walk(hexagon, s, last=last))


def _all_words(hexagon, max_len):
    # Every reduced word of length at most max_len with the point q = w^-1 c,
    # layer by layer and without any pruning
    reflections = [r.m for r in hexagon.reflections]
    layer = [((), hexagon.center.coords)]
    yield layer[0]
    for length in range(max_len):
        layer = [
            (word + (i,), reflections[i] @ q)
            for word, q in layer
            for i in range(3)
            if not word or word[-1] != i
            ]
        for item in layer:
            yield item


def brute_force_census(a, max_len):
    """
    Return ``(raw, distinct)``: the number of reduced words of length at most
    *max_len* and the number of distinct orbit points they give at the key
    grid. The two agree since the group acts freely on the orbit.
    """
    if not 0 <= max_len <= MAX_ORACLE_LENGTH:
        raise PantsOrbitError(
            'max_len must be in [0, %d], not %r' % (MAX_ORACLE_LENGTH, max_len))
    hexagon = build_hexagon(a)
    raw = 0
    keys = set()
    for word, q in _all_words(hexagon, max_len):
        raw += 1
        keys.add(point_key(q))
    return raw, len(keys)


def brute_force_radius(a, max_len):
    """
    Return the radius below which :func:`brute_force_count` is exact: the
    least distance from the center to a mirror crossed by a word of length
    ``max_len + 1``. Every longer word's orbit point lies beyond one of these.
    """
    hexagon = build_hexagon(a)
    jp = (J @ np.column_stack([n.coords for n in hexagon.a_poles])).T
    best = math.inf
    for word, q in _all_words(hexagon, max_len):
        if len(word) != max_len:
            continue
        mirrors = jp @ q
        for i in range(3):
            if word and word[-1] == i:
                continue
            best = min(best, math.asinh(abs(float(mirrors[i]))))
    return best


def brute_force_count(a, max_len, R):
    """
    Count, without any pruning, the distinct orbit points of all reduced words
    of length at most *max_len* within *R* of the center.

    This is an independent oracle for :func:`count`, valid for ``R`` below
    :func:`brute_force_radius`.
    """
    if not 0 <= max_len <= MAX_ORACLE_LENGTH:
        raise PantsOrbitError(
            'max_len must be in [0, %d], not %r' % (MAX_ORACLE_LENGTH, max_len))
    hexagon = build_hexagon(a)
    c = hexagon.center
    found = {}
    for word, q in _all_words(hexagon, max_len):
        point = Point(q, check=False)
        found.setdefault(point_key(point), dist(c, point))
    logger.debug(
        'oracle a=%g max_len=%d certifies R < %g',
        a, max_len, brute_force_radius(a, max_len))
    return sum(1 for d in found.values() if d <= R + DIST_TOLERANCE)


def orbit_distances(a, R, cap=DEFAULT_COUNT_CAP, check_collisions=True):
    """
    Return the sorted numpy array of the distances from the center of all
    orbit points within *R*.
    """
    hexagon = build_hexagon(a)
    guard = CollisionGuard() if check_collisions else None
    found = []
    for word, q, d in _walk(hexagon, R):
        if guard is not None:
            guard.add(q, word)
        found.append(d)
        if len(found) > cap:
            raise PantsCountCapError(
                'count exceeds cap %d at a=%g R=%g' % (cap, a, R))
    return np.sort(np.array(found))


def counts_on_grid(distances, radii):
    """
    Return ``N(R)`` for every R in *radii* given the sorted orbit *distances*.
    """
    radii = np.asarray(radii, dtype=float)
    return np.searchsorted(distances, radii + DIST_TOLERANCE, side='right')


def fit_delta(counts, a=None):
    """
    Fit ``log N = delta R + log_cst`` by least squares on the ``(R, N)`` pairs
    of *counts* and return a :class:`DeltaEstimate`.

    Warns with :exc:`~pantsurfaces.PantsFitWarning` when the slopes of the
    two halves of the window disagree by more than 0.1, and when the slope
    leaves (0, 1).
    """
    counts = sorted((float(r), int(n)) for r, n in counts)
    if len(counts) < 6:
        raise PantsFitError('need at least 6 radii, got %d' % len(counts))
    radii = np.array([r for r, _ in counts])
    values = np.array([n for _, n in counts])
    if np.any(np.diff(values) < 0):
        raise PantsFitError('counts are not monotone in R')
    if values[0] < 1:
        raise PantsFitError('counts must be positive')
    logs = np.log(values)
    delta, log_cst = np.polyfit(radii, logs, 1)
    residual = logs - (delta * radii + log_cst)
    half = len(radii) // 2
    low = np.polyfit(radii[:half + 1], logs[:half + 1], 1)[0]
    high = np.polyfit(radii[half:], logs[half:], 1)[0]
    instability = abs(float(high - low))
    if instability > DELTA_INSTABILITY:
        warnings.warn(PantsFitWarning(
            'half-window slopes disagree (%.4f vs %.4f)' % (low, high)))
    if not 0 < delta < 1:
        warnings.warn(PantsFitWarning(
            'fitted exponent %.4f outside (0, 1)' % delta))
    return DeltaEstimate(
        delta=float(delta),
        log_cst=float(log_cst),
        r_window=(float(radii[0]), float(radii[-1])),
        residual_rms=float(np.sqrt(np.mean(residual ** 2))),
        instability=instability,
        counts=counts,
        a=a)


def delta_radius(a, target=20000, cap=DEFAULT_COUNT_CAP):
    """
    Return a radius at which ``count(a, R)`` first reaches *target*, rounded
    up to a multiple of a tenth.
    """
    hexagon = build_hexagon(a)
    R = 2.0 * hexagon.adjacent_midpoint_distance
    while True:
        distances = orbit_distances(a, R, cap=cap)
        if len(distances) >= target:
            return math.ceil(10.0 * float(distances[target - 1])) / 10.0
        R *= 1.25


def estimate_delta(a, R_min=None, R_max=None, step=None,
                   cap=DEFAULT_COUNT_CAP):
    """
    Estimate the critical exponent at *a* from the counts on the grid
    ``R_min, R_min + step, ..., R_max``.

    *R_max* defaults to :func:`delta_radius`, *R_min* to ``0.4 R_max`` and
    *step* to a twentieth of the window.
    """
    if R_max is None:
        R_max = delta_radius(a, cap=cap)
    if R_min is None:
        R_min = DELTA_WINDOW * R_max
    if step is None:
        step = (R_max - R_min) / 20.0
    if not step > 0 or R_max - R_min < 5 * step - 1e-12:
        raise PantsFitError(
            'window [%g, %g] is too small for step %g' % (R_min, R_max, step))
    distances = orbit_distances(a, R_max, cap=cap)
    if len(distances) < 1000:
        raise PantsFitError(
            'only %d orbit points within R_max=%g; need 1000' %
            (len(distances), R_max))
    radii = np.arange(R_min, R_max + 0.5 * step, step)
    values = counts_on_grid(distances, radii)
    estimate = fit_delta(zip(radii.tolist(), values.tolist()), a=a)
    logger.info(
        'a=%g delta=%.5f over [%g, %g] (N=%d)',
        a, estimate.delta, R_min, R_max, len(distances))
    return estimate
