#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains the distance-ordered exploration of random surfaces.

"""
Exploration of the neighbourhood of a pants in a random surface, revealing
the gluings one at a time in order of hyperbolic distance.

The exploration keeps a frontier of unpaired legs of the pants found so far,
each keyed by the distance from the starting midpoint to the geodesic
carrying the leg in the development. At each step the closest leg is paired:

* with a half-edge drawn uniformly from all unpaired ones (online mode, which
  samples the random graph lazily), or
* with its partner in a fixed graph (on-graph mode).

A *good* step reaches a new pants, whose two other legs join the frontier; a
*bad* step closes a cycle by pairing two frontier legs.
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

import numpy as np

from pantsurfaces.errors import (
    PantsExplorationError,
    PantsLedgerError,
    PantsPoolDepletedError,
    )
from pantsurfaces.const import (
    DEFAULT_EPSILON,
    DIST_TOLERANCE,
    RENORMALIZE_EVERY,
    )
from pantsurfaces.geometry import (
    J,
    Isometry,
    Point,
    dist_to_segment,
    renormalize,
    )
from pantsurfaces.hexagon import build_hexagon
from pantsurfaces.graphs import TrivalentGraph, matching_from_permutation
from pantsurfaces.rng import make_rng


logger = logging.getLogger(__name__)


def tau_target(n):
    """
    Return the number of pants an exploration of a surface with ``2 * n``
    pants stops at: ``ceil(sqrt(n) ln n)``, clamped to ``[2, 2n]``.
    """
    return min(2 * n, max(2, int(math.ceil(math.sqrt(n) * math.log(n)))))


def phase1_steps(n, epsilon):
    return int(math.floor(n ** (0.5 - epsilon)))


def bad_step_threshold(epsilon):
    return int(math.floor(3.0 / epsilon)) + 1


def bad_step_prob(frontier_size, n, i):
    """
    Return the probability ``(f - 1) / (6n - 2i - 1)`` that online step *i*
    (counted from 0) is bad when the frontier holds *frontier_size* legs.
    """
    if frontier_size < 1:
        raise PantsExplorationError(
            'frontier must hold at least one leg, not %r' % (frontier_size,))
    remaining = 6 * n - 2 * i - 1
    if remaining < 1:
        raise PantsPoolDepletedError(
            'no half-edge left to pair at step %d with n=%d' % (i, n))
    return (frontier_size - 1) / remaining


class HalfEdgePool(object):
    """
    The set of unpaired half-edges ``0 .. size - 1``, supporting removal and
    uniform draws in constant time.

    This is a Fisher-Yates shuffle stored sparsely: only the slots that have
    been disturbed are kept, so huge pools cost nothing until used.
    """

    def __init__(self, size):
        self._size = size
        self._slot = {}   # slot -> half-edge, when moved
        self._where = {}  # half-edge -> slot, when moved

    def __len__(self):
        return self._size

    def _at(self, slot):
        return self._slot.get(slot, slot)

    def _find(self, h):
        return self._where.get(h, h)

    def __contains__(self, h):
        slot = self._find(h)
        return slot < self._size and self._at(slot) == h

    def remove(self, h):
        slot = self._find(h)
        if not (slot < self._size and self._at(slot) == h):
            raise PantsExplorationError('half-edge %d is already paired' % h)
        last = self._size - 1
        moved = self._at(last)
        self._slot[slot] = moved
        self._where[moved] = slot
        self._slot.pop(last, None)
        self._where.pop(h, None)
        self._size = last

    def draw(self, rng):
        """
        Remove and return a uniformly random half-edge.
        """
        if not self._size:
            raise PantsPoolDepletedError('half-edge pool is empty')
        h = self._at(int(rng.integers(self._size)))
        self.remove(h)
        return h

    def remaining(self):
        return [self._at(slot) for slot in range(self._size)]


class ExplorationReport(object):
    """
    The outcome of one exploration.

    .. attribute:: steps

        Number of legs paired.

    .. attribute:: vertices_found

        Number of pants discovered, the starting one included.

    .. attribute:: bad_phase1

        Bad steps among the first :attr:`phase1_steps` steps.

    .. attribute:: bad_phase2

        Bad steps after those.

    .. attribute:: radius

        Largest distance from the starting midpoint to a discovered midpoint.

    .. attribute:: disconnected

        True when the frontier emptied before the target was reached: the
        component of the starting pants is then smaller than the target.

    .. attribute:: distances

        Dict mapping each discovered pants to the distance of its midpoint in
        the development, in discovery order.

    .. attribute:: pairs

        Revealed pairs ``(v1, leg1, v2, leg2)`` in revelation order.

    .. attribute:: history

        ``(frontier_size, bad)`` for every step, the frontier size being
        measured before the step.

    .. attribute:: next_key

        Smallest key left in the frontier, or ``None`` if it is empty.
    """

    def __init__(
            self, n, a, epsilon, seed, start, tau_target, phase1_steps,
            k_threshold, steps, vertices_found, bad_phase1, bad_phase2,
            radius, disconnected, distances, pairs, history, next_key=None,
            predicted_radius=None):
        self.n = n
        self.a = a
        self.epsilon = epsilon
        self.seed = seed
        self.start = start
        self.tau_target = tau_target
        self.phase1_steps = phase1_steps
        self.k_threshold = k_threshold
        self.steps = steps
        self.vertices_found = vertices_found
        self.bad_phase1 = bad_phase1
        self.bad_phase2 = bad_phase2
        self.radius = radius
        self.disconnected = disconnected
        self.distances = distances
        self.pairs = pairs
        self.history = history
        self.next_key = next_key
        self.predicted_radius = predicted_radius

    @property
    def bad_total(self):
        return self.bad_phase1 + self.bad_phase2

    @property
    def lemma_hypotheses(self):
        # Few bad steps early, and polylogarithmically many later
        return (
            self.bad_phase1 < self.k_threshold and
            self.bad_phase2 < math.log(max(self.n, 2)) ** 3)

    def row(self):
        return {
            'seed': self.seed,
            'n': self.n,
            'a': self.a,
            'steps': self.steps,
            'vertices_found': self.vertices_found,
            'bad_phase1': self.bad_phase1,
            'bad_total': self.bad_total,
            'radius': self.radius,
            'disconnected': int(self.disconnected),
            }

    def to_dict(self):
        result = self.row()
        result.update({
            'epsilon': self.epsilon,
            'start': self.start,
            'tau_target': self.tau_target,
            'phase1_steps': self.phase1_steps,
            'bad_phase2': self.bad_phase2,
            'k_threshold': self.k_threshold,
            'lemma_hypotheses': self.lemma_hypotheses,
            'predicted_radius': self.predicted_radius,
            'next_key': self.next_key,
            'disconnected': self.disconnected,
            })
        return result

    def __repr__(self):
        return (
            '<ExplorationReport n=%d a=%g found=%d bad=%d radius=%.4f%s>' % (
                self.n, self.a, self.vertices_found, self.bad_total,
                self.radius, ' disconnected' if self.disconnected else ''))


class Exploration(object):
    """
    The state of one exploration: developed frames of the pants found so
    far, the frontier of their unpaired legs and the step ledger.

    The caller reveals partners; see :func:`explore` and
    :func:`explore_pair`.
    """

    def __init__(self, hexagon, start, segment_distance=False):
        self.hexagon = hexagon
        self.start = start
        self.segment_distance = segment_distance
        self._jc = J @ hexagon.center.coords
        self._poles = np.column_stack([n.coords for n in hexagon.a_poles])
        self.frames = {}
        self.depths = {}
        self.distances = {}
        self.open = set()
        self.pairs = []
        self.history = []
        self.good = 0
        self.bad = 0
        self.last_key = 0.0
        self._heap = []
        self._discover(start, np.eye(3), 0)

    @property
    def frontier_size(self):
        return len(self.open)

    @property
    def steps(self):
        return self.good + self.bad

    def leg_key(self, frame, leg):
        """
        Return the key of leg *leg* of the pants developed with *frame*: the
        distance from the starting midpoint to the geodesic carrying it, or
        to the side itself in segment mode.
        """
        if self.segment_distance:
            h = self.hexagon
            return dist_to_segment(
                h.center,
                Point(frame @ h.vertices[2 * leg].coords, check=False),
                Point(frame @ h.vertices[2 * leg + 1].coords, check=False))
        return math.asinh(abs(float(self._jc @ frame @ self._poles[:, leg])))

    def _discover(self, vertex, frame, depth, skip=None):
        self.frames[vertex] = frame
        self.depths[vertex] = depth
        self.distances[vertex] = math.acosh(
            max(1.0, -float(self._jc @ frame @ self.hexagon.center.coords)))
        for leg in range(3):
            if leg != skip:
                h = 3 * vertex + leg
                self.open.add(h)
                heapq.heappush(
                    self._heap, (self.leg_key(frame, leg), vertex, leg))

    def peek(self):
        while self._heap:
            key, vertex, leg = self._heap[0]
            if 3 * vertex + leg in self.open:
                return key
            heapq.heappop(self._heap)
        return None

    def pop(self):
        """
        Remove the frontier leg with the smallest key (ties broken by vertex
        then leg) and return its half-edge.
        """
        if self.peek() is None:
            raise PantsExplorationError('frontier is empty')
        key, vertex, leg = heapq.heappop(self._heap)
        if not self.segment_distance:
            if key < self.last_key - DIST_TOLERANCE:
                raise PantsExplorationError(
                    'key %r popped after %r' % (key, self.last_key))
        self.last_key = key
        h = 3 * vertex + leg
        self.history.append((len(self.open), False))
        self.open.discard(h)
        return h

    def settle(self, h, partner):
        """
        Record that the leg *h* just popped is glued to half-edge *partner*.
        Returns ``True`` for a good step, which develops the partner's pants.
        """
        vertex, j = divmod(h, 3)
        other, k = divmod(partner, 3)
        self.pairs.append(divmod(h, 3) + divmod(partner, 3))
        if other in self.frames:
            if partner not in self.open:
                raise PantsLedgerError(
                    'half-edge %d of a discovered pants is not open' % partner)
            self.open.discard(partner)
            self.bad += 1
            self.history[-1] = (self.history[-1][0], True)
            good = False
        else:
            frame = self.frames[vertex] @ self.hexagon.gluing(j, k).m
            depth = self.depths[vertex] + 1
            if depth % RENORMALIZE_EVERY == 0:
                frame = renormalize(
                    Isometry(frame, det_sign=(-1) ** depth, check=False)).m
            self._discover(other, frame, depth, skip=k)
            self.good += 1
            good = True
        if len(self.open) != 3 + self.good - 2 * self.bad:
            raise PantsLedgerError(
                'frontier holds %d legs after %d good and %d bad steps' %
                (len(self.open), self.good, self.bad))
        return good

    @property
    def radius(self):
        return max(self.distances.values())

    def report(self, n, a, epsilon, seed, target, disconnected, delta=None):
        phase1 = phase1_steps(n, epsilon)
        bad_phase1 = sum(
            1 for i, (_, bad) in enumerate(self.history) if bad and i < phase1)
        predicted = None
        if delta:
            predicted = 0.5 * (1.0 / delta + epsilon) * math.log(n)
        return ExplorationReport(
            n=n,
            a=a,
            epsilon=epsilon,
            seed=seed,
            start=self.start,
            tau_target=target,
            phase1_steps=phase1,
            k_threshold=bad_step_threshold(epsilon),
            steps=self.steps,
            vertices_found=len(self.frames),
            bad_phase1=bad_phase1,
            bad_phase2=self.bad - bad_phase1,
            radius=self.radius,
            disconnected=disconnected,
            distances=dict(self.distances),
            pairs=list(self.pairs),
            history=list(self.history),
            next_key=self.peek(),
            predicted_radius=predicted,
            )


def _check_arguments(n, epsilon):
    if n < 1:
        raise PantsExplorationError('n must be at least 1, not %r' % (n,))
    if not 0 < epsilon < 0.5:
        raise PantsExplorationError(
            'epsilon must lie in (0, 1/2), not %r' % (epsilon,))


def explore(n, a, epsilon=DEFAULT_EPSILON, seed=0, graph=None, start=0,
            exhaust=False, segment_distance=False, delta=None, target=None):
    """
    Explore the surface with ``2 * n`` pants of boundary length ``2 * a``
    from the midpoint of pants *start*, and return an
    :class:`ExplorationReport`.

    Without *graph* the gluings are drawn online with a stream seeded by
    *seed*; with *graph* (on-graph mode) they are read from it and *n* must
    match. The exploration stops once *target* pants (by default
    :func:`tau_target`) are found or the frontier empties; with *exhaust* it
    only stops on the latter.
    """
    if graph is not None:
        if graph.n != n:
            raise PantsExplorationError(
                'graph has n=%d, not %d' % (graph.n, n))
        if seed is None:
            seed = graph.seed
    _check_arguments(n, epsilon)
    if not 0 <= start < 2 * n:
        raise PantsExplorationError('no pants %r' % (start,))
    if target is None:
        target = tau_target(n)
    hexagon = build_hexagon(a)
    state = Exploration(hexagon, start, segment_distance=segment_distance)
    rng = make_rng(seed if seed is not None else 0)
    pool = None if graph is not None else HalfEdgePool(6 * n)
    while exhaust or len(state.frames) < target:
        if state.peek() is None:
            break
        h = state.pop()
        if pool is None:
            partner = int(graph.pairing[h])
        else:
            pool.remove(h)
            partner = pool.draw(rng)
        state.settle(h, partner)
    disconnected = state.peek() is None and (
        len(state.frames) < (2 * n if exhaust else target))
    report = state.report(
        n, a, epsilon, seed, target, disconnected, delta=delta)
    logger.debug('%r', report)
    return report


class PairReport(object):
    """
    The outcome of :func:`explore_pair`.

    .. attribute:: merged

        True when the second exploration reached the first one's frontier.

    .. attribute:: disconnected

        True when either exploration closed up before its target.

    .. attribute:: distance_bound

        When merged, an upper bound on the distance between the two starting
        midpoints; ``None`` otherwise.

    .. attribute:: graph

        The full graph obtained by completing the revealed pairs uniformly.
    """

    def __init__(self, merged, disconnected, distance_bound, first, second,
                 starts, graph):
        self.merged = merged
        self.disconnected = disconnected
        self.distance_bound = distance_bound
        self.first = first
        self.second = second
        self.starts = starts
        self.graph = graph

    def to_dict(self):
        return {
            'merged': self.merged,
            'disconnected': self.disconnected,
            'distance_bound': self.distance_bound,
            'starts': list(self.starts),
            }

    def __repr__(self):
        return '<PairReport merged=%s disconnected=%s bound=%r>' % (
            self.merged, self.disconnected, self.distance_bound)


def explore_pair(n, a, epsilon=DEFAULT_EPSILON, seed=0, target=None):
    """
    Run an online exploration from a uniform pants up to its target, then a
    second one from another uniform pants against the half-edges left
    unpaired, and report whether the second reaches the first.

    Either the two neighbourhoods merge, giving a bound on the distance
    between the two midpoints through the pants where they meet, or one of
    them closes up and the surface is disconnected.
    """
    _check_arguments(n, epsilon)
    if target is None:
        target = tau_target(n)
    hexagon = build_hexagon(a)
    rng = make_rng(seed)
    pool = HalfEdgePool(6 * n)
    start1 = int(rng.integers(2 * n))
    start2 = int(rng.integers(2 * n - 1))
    if start2 >= start1:
        start2 += 1

    first = Exploration(hexagon, start1)
    while len(first.frames) < target and first.peek() is not None:
        h = first.pop()
        pool.remove(h)
        first.settle(h, pool.draw(rng))
    disconnected = first.peek() is None and len(first.frames) < target

    second = Exploration(hexagon, start2)
    merged = False
    bound = None
    if disconnected:
        pass
    elif start2 in first.frames:
        merged = True
        bound = first.distances[start2]
    else:
        while len(second.frames) < target and second.peek() is not None:
            h = second.pop()
            pool.remove(h)
            partner = pool.draw(rng)
            if partner in first.open:
                first.open.discard(partner)
                second.pairs.append(divmod(h, 3) + divmod(partner, 3))
                merged = True
                bound = (
                    first.radius + second.radius +
                    hexagon.adjacent_midpoint_distance)
                break
            second.settle(h, partner)
        if not merged:
            disconnected = (
                second.peek() is None and len(second.frames) < target)

    # Complete the half-edges nobody reached uniformly, so that the pair of
    # explorations is read off an ordinary sample of the graph
    pairing = np.full(6 * n, -1, dtype=np.int64)
    for v1, l1, v2, l2 in first.pairs + second.pairs:
        pairing[3 * v1 + l1] = 3 * v2 + l2
        pairing[3 * v2 + l2] = 3 * v1 + l1
    rest = np.array(pool.remaining(), dtype=np.int64)
    if len(rest):
        completion = matching_from_permutation(rng.permutation(len(rest)))
        pairing[rest] = rest[completion]
    graph = TrivalentGraph(n, pairing, seed=seed)

    kwargs = dict(n=n, a=a, epsilon=epsilon, seed=seed, target=target)
    report = PairReport(
        merged=merged,
        disconnected=disconnected,
        distance_bound=bound,
        first=first.report(disconnected=first.peek() is None and
                           len(first.frames) < target, **kwargs),
        second=second.report(disconnected=disconnected and not merged,
                             **kwargs),
        starts=(start1, start2),
        graph=graph)
    logger.debug('%r', report)
    return report
