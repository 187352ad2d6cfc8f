#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains random trivalent graphs and the surfaces built on them.

"""
Random trivalent graphs from the configuration model, and the hyperbolic
surfaces obtained by gluing one pair of pants per vertex.

A :class:`TrivalentGraph` on ``2n`` vertices has ``6n`` half-edges; half-edge
``h`` is leg ``h % 3`` of vertex ``h // 3``. The graph is entirely described
by its pairing, a fixed-point-free involution of the half-edges. Loops and
multiple edges are kept.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import io
import math
import logging
import warnings

import numpy as np
import networkx as nx

from pantsurfaces.errors import (
    PantsGraphError,
    PantsDisconnectedError,
    PantsGraphFormatError,
    PantsEstimateWarning,
    )
from pantsurfaces.const import (
    DISCONNECTED,
    SAMPLED_DIAMETER_VERTICES,
    SAMPLED_DIAMETER_SOURCES,
    )
from pantsurfaces.hexagon import build_hexagon, pants_constants
from pantsurfaces.rng import make_rng


logger = logging.getLogger(__name__)


def half_edge(vertex, leg):
    return 3 * vertex + leg


class TrivalentGraph(object):
    """
    A trivalent multigraph on ``2 * n`` vertices given by a perfect matching
    of its ``6 * n`` half-edges.

    Instances are immutable. Two graphs compare equal when they have the same
    pairing, whatever the seed they were sampled with.

    .. attribute:: n

        Half the number of vertices; the surface built on the graph has genus
        ``n + 1``.

    .. attribute:: pairing

        Read-only integer numpy array; ``pairing[h]`` is the half-edge matched
        with half-edge ``h``.

    .. attribute:: seed

        The seed the graph was sampled with, or ``None``.
    """

    def __init__(self, n, pairing, seed=None):
        if n < 1:
            raise PantsGraphError('n must be at least 1, not %r' % (n,))
        pairing = np.array(pairing, dtype=np.int64)
        if pairing.shape != (6 * n,):
            raise PantsGraphError(
                'pairing of a graph with n=%d needs %d half-edges, not %r' %
                (n, 6 * n, pairing.shape))
        if pairing.min() < 0 or pairing.max() >= 6 * n:
            raise PantsGraphError('pairing refers to unknown half-edges')
        h = np.arange(6 * n)
        if np.any(pairing == h):
            raise PantsGraphError('pairing has a fixed point')
        if np.any(pairing[pairing] != h):
            raise PantsGraphError('pairing is not an involution')
        pairing.setflags(write=False)
        self.n = n
        self.pairing = pairing
        self.seed = seed
        self._nx = None

    @classmethod
    def from_pairs(cls, n, pairs, seed=None):
        """
        Build a graph from an iterable of ``(v1, leg1, v2, leg2)`` tuples, one
        per matched pair.
        """
        pairing = np.full(6 * n, -1, dtype=np.int64)
        for v1, leg1, v2, leg2 in pairs:
            for v, leg in ((v1, leg1), (v2, leg2)):
                if not (0 <= v < 2 * n and 0 <= leg < 3):
                    raise PantsGraphError(
                        'no half-edge (%r, %r) in a graph with n=%d' %
                        (v, leg, n))
            h1 = half_edge(v1, leg1)
            h2 = half_edge(v2, leg2)
            if pairing[h1] != -1 or pairing[h2] != -1:
                raise PantsGraphError(
                    'half-edge paired twice in (%d, %d, %d, %d)' %
                    (v1, leg1, v2, leg2))
            pairing[h1] = h2
            pairing[h2] = h1
        if np.any(pairing == -1):
            raise PantsGraphError('some half-edges are left unpaired')
        return cls(n, pairing, seed=seed)

    @property
    def vertex_count(self):
        return 2 * self.n

    def partner(self, vertex, leg):
        """
        Return ``(vertex, leg)`` of the half-edge matched with leg *leg* of
        *vertex*.
        """
        return divmod(int(self.pairing[half_edge(vertex, leg)]), 3)

    def pairs(self):
        """
        Yield every matched pair once as ``(v1, leg1, v2, leg2)``, the smaller
        half-edge first.
        """
        for h, k in enumerate(self.pairing.tolist()):
            if h < k:
                yield divmod(h, 3) + divmod(k, 3)

    def to_networkx(self):
        """
        Return the graph as a :class:`networkx.MultiGraph` whose edges carry
        the ``legs`` they join.
        """
        if self._nx is None:
            graph = nx.MultiGraph()
            graph.add_nodes_from(range(self.vertex_count))
            for v1, leg1, v2, leg2 in self.pairs():
                graph.add_edge(v1, v2, legs=(leg1, leg2))
            self._nx = graph
        return self._nx

    def __eq__(self, other):
        if not isinstance(other, TrivalentGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(
            self.pairing, other.pairing)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.n, self.pairing.tobytes()))

    def __repr__(self):
        return '<TrivalentGraph n=%d seed=%r>' % (self.n, self.seed)


def matching_from_permutation(permutation):
    """
    Return the pairing matching consecutive entries of *permutation*.
    """
    permutation = np.asarray(permutation, dtype=np.int64)
    pairing = np.empty_like(permutation)
    pairing[permutation[0::2]] = permutation[1::2]
    pairing[permutation[1::2]] = permutation[0::2]
    return pairing


def sample_graph(n, seed):
    """
    Return a uniformly random :class:`TrivalentGraph` on ``2 * n`` vertices:
    the ``6 * n`` half-edges are shuffled with a PCG64 stream seeded with
    *seed* and matched consecutively. The result depends only on ``(n,
    seed)``.
    """
    if n < 1:
        raise PantsGraphError('n must be at least 1, not %r' % (n,))
    rng = make_rng(seed)
    pairing = matching_from_permutation(rng.permutation(6 * n))
    return TrivalentGraph(n, pairing, seed=seed)


def is_connected(g):
    return nx.is_connected(g.to_networkx())


def genus(g):
    """
    Return the genus ``n + 1`` of the surface glued along *g*, or
    :data:`~pantsurfaces.const.DISCONNECTED` when *g* is not connected (the
    surface then has several components and no single genus).
    """
    if not is_connected(g):
        return DISCONNECTED
    return g.n + 1


def graph_distances(g, source):
    """
    Return a dict mapping every vertex reachable from *source* to its
    combinatorial distance.
    """
    return nx.single_source_shortest_path_length(g.to_networkx(), source)


def graph_diameter(g, sample_above=SAMPLED_DIAMETER_VERTICES,
                   sources=SAMPLED_DIAMETER_SOURCES, seed=0):
    """
    Return the combinatorial diameter of the connected graph *g*.

    Graphs with more than *sample_above* vertices only get the eccentricities
    of *sources* random vertices; the result is then a lower bound and
    :exc:`~pantsurfaces.PantsEstimateWarning` is emitted.
    """
    graph = g.to_networkx()
    if not nx.is_connected(graph):
        raise PantsDisconnectedError('diameter of a disconnected graph')
    if g.vertex_count <= sample_above:
        return int(nx.diameter(graph))
    rng = make_rng(seed)
    chosen = rng.choice(g.vertex_count, size=min(sources, g.vertex_count),
                        replace=False)
    warnings.warn(PantsEstimateWarning(
        'graph diameter estimated from %d of %d vertices (lower bound)' %
        (len(chosen), g.vertex_count)))
    return max(
        int(nx.eccentricity(graph, v=int(v))) for v in chosen)


def graph_ratio(g, diameter=None):
    """
    Return ``diameter / log2(2n)``, which tends to 1 for random trivalent
    graphs.
    """
    if diameter is None:
        diameter = graph_diameter(g)
    return diameter / math.log2(g.vertex_count)


class Surface(object):
    """
    The hyperbolic surface glued from one pair of pants per vertex of
    :attr:`graph`, all with boundary lengths ``2 * a``, along the edges of the
    graph without twist.

    .. attribute:: genus

        ``n + 1``, or :data:`~pantsurfaces.const.DISCONNECTED`.
    """

    def __init__(self, graph, a):
        self.graph = graph
        self.a = float(a)
        self.hexagon = build_hexagon(a)
        self.constants = pants_constants(a)
        self.genus = genus(graph)

    @property
    def n(self):
        return self.graph.n

    @property
    def connected(self):
        return self.genus != DISCONNECTED

    def __repr__(self):
        return '<Surface n=%d a=%g genus=%s>' % (self.n, self.a, self.genus)


def build_surface(g, a):
    return Surface(g, a)


def write_graph(g, filename_or_obj):
    """
    Write *g* to *filename_or_obj*: a header line ``n=<n> seed=<seed>`` (seed
    ``-1`` when unknown) followed by one ``v1 leg1 v2 leg2`` line per pair.
    """
    lines = ['n=%d seed=%d' % (g.n, -1 if g.seed is None else g.seed)]
    lines.extend('%d %d %d %d' % pair for pair in g.pairs())
    text = '\n'.join(lines) + '\n'
    if isinstance(filename_or_obj, (str, bytes)):
        with io.open(filename_or_obj, 'w', encoding='ascii') as f:
            f.write(text)
    else:
        filename_or_obj.write(text)


def _parse_header(line):
    fields = {}
    for item in line.split():
        key, sep, value = item.partition('=')
        if not sep or key not in ('n', 'seed'):
            raise PantsGraphFormatError('invalid header item %r' % item)
        try:
            fields[key] = int(value)
        except ValueError:
            raise PantsGraphFormatError('invalid header value %r' % item)
    if 'n' not in fields:
        raise PantsGraphFormatError('header lacks n=')
    seed = fields.get('seed', -1)
    return fields['n'], (None if seed == -1 else seed)


def read_graph(filename_or_obj):
    """
    Read a graph written by :func:`write_graph`.

    Raises :exc:`~pantsurfaces.PantsGraphFormatError` on malformed input and
    :exc:`~pantsurfaces.PantsGraphError` when the lines do not describe a
    perfect matching.
    """
    if isinstance(filename_or_obj, (str, bytes)):
        with io.open(filename_or_obj, 'r', encoding='ascii') as f:
            text = f.read()
    else:
        text = filename_or_obj.read()
    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith('#')
        ]
    if not lines:
        raise PantsGraphFormatError('empty graph file')
    n, seed = _parse_header(lines[0])
    pairs = []
    for number, line in enumerate(lines[1:], start=2):
        try:
            pair = tuple(int(x) for x in line.split())
        except ValueError:
            raise PantsGraphFormatError('line %d is not numeric' % number)
        if len(pair) != 4:
            raise PantsGraphFormatError(
                'line %d needs 4 fields, not %d' % (number, len(pair)))
        pairs.append(pair)
    if len(pairs) != 3 * n:
        raise PantsGraphFormatError(
            'graph with n=%d needs %d pairs, found %d' %
            (n, 3 * n, len(pairs)))
    return TrivalentGraph.from_pairs(n, pairs, seed=seed)
