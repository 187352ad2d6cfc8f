#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains exact midpoint distances and diameter bounds.

"""
Distances between pants midpoints of a glued surface, computed in the
development of its hexagons, and bounds on the diameter of the surface.

A shortest path between two midpoints stays within the hexagons glued along
their a-sides, so it is found among the developments of non-backtracking
walks in the graph: starting from the source pants at the identity frame,
crossing leg ``j`` of a pants glued to leg ``k`` of its neighbour develops the
neighbour with ``frame @ hexagon.gluing(j, k)``. The search expands these
developments in order of the distance to the mirror they crossed; since a
developed midpoint lies beyond all mirrors crossed to reach it, a candidate
distance is final as soon as every frontier mirror is further away.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import math
import heapq
import logging
import itertools
import warnings
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from pantsurfaces.errors import (
    PantsDisconnectedError,
    PantsSearchError,
    PantsStateCapError,
    PantsKeyCollisionError,
    PantsBoundsError,
    PantsEstimateWarning,
    )
from pantsurfaces.const import (
    DEFAULT_STATE_CAP,
    RENORMALIZE_EVERY,
    SAMPLED_DIAMETER_VERTICES,
    )
from pantsurfaces.geometry import (
    J,
    Isometry,
    isometry_key,
    renormalize,
    )
from pantsurfaces.graphs import (
    Surface,
    graph_distances,
    graph_diameter,
    )
from pantsurfaces.rng import derive_seed, make_rng


logger = logging.getLogger(__name__)


DevState = namedtuple(
    'DevState', ('vertex', 'frame', 'entry_dist', 'entry_leg', 'depth'))


class DistanceField(object):
    """
    Distances from the midpoint of pants :attr:`source` to all midpoints.

    .. attribute:: dist

        Float numpy array indexed by pants; ``inf`` where nothing was found.

    .. attribute:: settled

        Boolean numpy array; unsettled entries of :attr:`dist` are upper
        bounds only.

    .. attribute:: budget_radius

        The search stopped expanding mirrors further than this.

    .. attribute:: states

        Number of developed states.
    """

    def __init__(self, source, dist, settled, budget_radius, states):
        self.source = source
        self.dist = dist
        self.settled = settled
        self.budget_radius = budget_radius
        self.states = states

    @property
    def complete(self):
        return bool(self.settled.all())

    @property
    def eccentricity(self):
        # largest settled distance; the others are only upper bounds
        settled = self.dist[self.settled]
        return float(settled.max()) if settled.size else 0.0

    def __repr__(self):
        return '<DistanceField source=%d settled=%d/%d ecc=%.6f>' % (
            self.source, int(self.settled.sum()), len(self.settled),
            self.eccentricity)


def additive_bounds(surface, source):
    """
    Return the float array ``2 rho * graph_distance(source, v)``, an upper
    bound on every midpoint distance from *source*.
    """
    step = surface.hexagon.adjacent_midpoint_distance
    bounds = np.full(surface.graph.vertex_count, np.inf)
    for v, d in graph_distances(surface.graph, source).items():
        bounds[v] = step * d
    return bounds


def midpoint_distances(surface, source, budget=None, cap=DEFAULT_STATE_CAP):
    """
    Return the :class:`DistanceField` of the midpoint of pants *source* in
    *surface*.

    Mirrors further than *budget* are not crossed; the default budget is the
    largest additive bound, which settles every distance. Raises
    :exc:`~pantsurfaces.PantsStateCapError` if more than *cap* states are
    developed; the exception carries the partial field.
    """
    if not surface.connected:
        raise PantsDisconnectedError(
            'midpoint distances on a disconnected surface')
    graph = surface.graph
    count = graph.vertex_count
    if not 0 <= source < count:
        raise PantsSearchError('no pants %r' % (source,))
    hexagon = surface.hexagon
    if budget is None:
        budget = float(additive_bounds(surface, source).max())
    c = hexagon.center.coords
    jc = J @ c
    poles = np.column_stack([n.coords for n in hexagon.a_poles])
    gluings = [[hexagon.gluing(j, k).m for k in range(3)] for j in range(3)]

    dist = np.full(count, np.inf)
    settled = np.zeros(count, dtype=bool)
    dist[source] = 0.0
    candidates = [(0.0, source)]
    done = 0
    tiebreak = itertools.count()
    frontier = [
        (0.0, next(tiebreak), DevState(source, np.eye(3), 0.0, None, 0))]
    seen = {(source, isometry_key(Isometry.identity()))}

    def field():
        return DistanceField(source, dist.copy(), settled.copy(), budget,
                             len(seen))

    while frontier:
        lowest = frontier[0][0]
        while candidates and candidates[0][0] <= lowest:
            d, v = heapq.heappop(candidates)
            if not settled[v] and d == dist[v]:
                settled[v] = True
                done += 1
        if done == count or lowest > budget:
            break
        _, _, state = heapq.heappop(frontier)
        row = jc @ state.frame
        mirrors = row @ poles
        for j in range(3):
            if j == state.entry_leg:
                continue
            vertex, k = graph.partner(state.vertex, j)
            frame = state.frame @ gluings[j][k]
            depth = state.depth + 1
            sign = (-1) ** depth
            if depth % RENORMALIZE_EVERY == 0:
                frame = renormalize(
                    Isometry(frame, det_sign=sign, check=False)).m
            key = (vertex, isometry_key(
                Isometry(frame, det_sign=sign, check=False)))
            if key in seen:
                raise PantsKeyCollisionError(
                    'two developments of pants %d share a frame' % vertex)
            seen.add(key)
            entry = math.asinh(abs(float(mirrors[j])))
            d = math.acosh(max(1.0, -float(jc @ frame @ c)))
            if d < dist[vertex]:
                dist[vertex] = d
                heapq.heappush(candidates, (d, vertex))
            heapq.heappush(
                frontier,
                (entry, next(tiebreak),
                 DevState(vertex, frame, entry, k, depth)))
        if len(seen) > cap:
            raise PantsStateCapError(
                'midpoint search from %d exceeded %d states' % (source, cap),
                field=field())
    result = field()
    logger.debug('%r', result)
    return result


MidpointDiameter = namedtuple(
    'MidpointDiameter', ('value', 'certified', 'fields'))


def _distance_job(args):
    graph, a, source, budget, cap = args
    return midpoint_distances(Surface(graph, a), source, budget=budget, cap=cap)


def choose_sources(surface, sources='all', seed=0):
    """
    Return the sorted list of source pants: all of them, or *sources*
    distinct ones drawn with a stream derived from *seed*.
    """
    count = surface.graph.vertex_count
    if sources == 'all' or sources is None or int(sources) >= count:
        return list(range(count))
    rng = make_rng(derive_seed(seed, 'sources', surface.n))
    return sorted(int(v) for v in rng.choice(count, size=int(sources),
                                             replace=False))


def midpoint_diameter(surface, sources='all', seed=0, budget=None,
                      cap=DEFAULT_STATE_CAP, workers=1):
    """
    Return the :class:`MidpointDiameter` ``(value, certified, fields)`` of
    *surface*: the largest midpoint distance found from the chosen sources.

    The value is certified when every source was used and every field is
    complete; with sampled sources it is a lower bound.
    """
    chosen = choose_sources(surface, sources, seed)
    jobs = [(surface.graph, surface.a, s, budget, cap) for s in chosen]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            fields = list(executor.map(_distance_job, jobs))
    else:
        fields = [_distance_job(job) for job in jobs]
    value = max(f.eccentricity for f in fields)
    certified = (
        len(chosen) == surface.graph.vertex_count and
        all(f.complete for f in fields))
    if not certified:
        warnings.warn(PantsEstimateWarning(
            'midpoint diameter %.6f from %d of %d sources is a lower bound' %
            (value, len(chosen), surface.graph.vertex_count)))
    return MidpointDiameter(value, certified, fields)


def area_lower_bound(g):
    """
    Return ``arccosh(2g - 1)``, below which no closed hyperbolic surface of
    genus *g* has its diameter.
    """
    if g < 2:
        raise PantsBoundsError('genus must be at least 2, not %r' % (g,))
    return math.acosh(2 * g - 1)


def log_lower_bound(g):
    """
    Return ``log(4g - 2)``, the simpler form of :func:`area_lower_bound`
    which exceeds it by less than ``log 2``.
    """
    if g < 2:
        raise PantsBoundsError('genus must be at least 2, not %r' % (g,))
    return math.log(4 * g - 2)


DiameterBounds = namedtuple(
    'DiameterBounds',
    ('lower', 'log_lower', 'upper', 'midpoint_diameter', 'certified'))


def diameter_bounds(surface, diameter=None, graph_diam=None):
    """
    Return the :class:`DiameterBounds` of *surface*.

    The lower bound is :func:`area_lower_bound`. The upper bound adds twice
    the distance any point can be from its midpoint to a certified bound on
    the midpoint diameter: the diameter itself when certified, otherwise the
    smaller of ``2 * eccentricity`` over the complete fields and the additive
    bound along the graph diameter. Raises
    :exc:`~pantsurfaces.PantsBoundsError` if the bounds cross.
    """
    if not surface.connected:
        raise PantsDisconnectedError('diameter of a disconnected surface')
    if diameter is None:
        diameter = midpoint_diameter(surface)
    lower = area_lower_bound(surface.genus)
    reach = surface.constants.eccentricity_bound
    if diameter.certified:
        middle = diameter.value
    else:
        options = [2.0 * f.eccentricity for f in diameter.fields if f.complete]
        if surface.graph.vertex_count <= SAMPLED_DIAMETER_VERTICES:
            if graph_diam is None:
                graph_diam = graph_diameter(surface.graph)
            options.append(
                surface.hexagon.adjacent_midpoint_distance * graph_diam)
        if not options:
            raise PantsBoundsError('no certified bound on the midpoint diameter')
        middle = min(options)
        logger.info('midpoint diameter %.4f is a lower bound', diameter.value)
    upper = middle + 2.0 * reach
    if lower > upper:
        raise PantsBoundsError(
            'lower bound %.6f exceeds upper bound %.6f' % (lower, upper))
    return DiameterBounds(
        lower=lower,
        log_lower=log_lower_bound(surface.genus),
        upper=upper,
        midpoint_diameter=diameter.value,
        certified=diameter.certified)
