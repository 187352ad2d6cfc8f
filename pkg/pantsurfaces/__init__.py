#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains the public interface of the package.

"""
Random closed hyperbolic surfaces built by gluing pairs of pants along a
random trivalent graph, with the tools to measure them: the right-angled
hexagon the pants are made of, lattice point counts in the tree of hexagons,
distance-ordered explorations and exact midpoint distances.

Every pants has three boundary geodesics of length ``2a`` and is cut by its
seams into two copies of the symmetric right-angled hexagon; pants are glued
without twist, so that adjacent midpoints are as close as possible.


Geometry
========

.. autofunction:: dist

.. autofunction:: build_hexagon

.. autoclass:: Hexagon
    :members:


Counting
========

.. autofunction:: count

.. autofunction:: estimate_delta


Random surfaces
===============

.. autofunction:: sample_graph

.. autofunction:: explore

.. autofunction:: midpoint_diameter

.. autofunction:: diameter_bounds


Exceptions
==========

.. autoexception:: PantsError

.. autoexception:: PantsWarning

"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )


from pantsurfaces.errors import (
    PantsError,
    PantsGeometryError,
    PantsHexagonError,
    PantsOrbitError,
    PantsGraphError,
    PantsExplorationError,
    PantsSearchError,
    PantsCampaignError,
    PantsInvalidPointError,
    PantsCoincidentPointsError,
    PantsDriftError,
    PantsClosureError,
    PantsCenterError,
    PantsOrbitCollisionError,
    PantsCountCapError,
    PantsFitError,
    PantsDisconnectedError,
    PantsGraphFormatError,
    PantsLedgerError,
    PantsPoolDepletedError,
    PantsStateCapError,
    PantsKeyCollisionError,
    PantsBoundsError,
    PantsConfigError,
    PantsWarning,
    PantsEstimateWarning,
    PantsFitWarning,
    PantsRowWarning,
    PantsThresholdWarning,
    )
from pantsurfaces.const import VERSION as __version__, DISCONNECTED
from pantsurfaces.geometry import (
    Point,
    GeodesicPole,
    Isometry,
    ORIGIN,
    mink,
    dist,
    dist_to_geodesic,
    dist_to_segment,
    translate_x,
    rotate_o,
    reflection,
    geodesic_through,
    renormalize,
    renormalize_point,
    translate_to,
    isometry_key,
    point_key,
    )
from pantsurfaces.hexagon import (
    Hexagon,
    alternate_side,
    build_hexagon,
    pants_constants,
    )
from pantsurfaces.hextree import (
    ReducedWord,
    DeltaEstimate,
    enumerate_orbit,
    count,
    brute_force_count,
    brute_force_radius,
    subtree_count,
    word_length_bound,
    estimate_delta,
    fit_delta,
    )
from pantsurfaces.graphs import (
    TrivalentGraph,
    Surface,
    sample_graph,
    is_connected,
    genus,
    graph_diameter,
    build_surface,
    read_graph,
    write_graph,
    )
from pantsurfaces.exploration import (
    ExplorationReport,
    PairReport,
    explore,
    explore_pair,
    bad_step_prob,
    tau_target,
    )
from pantsurfaces.metric import (
    DistanceField,
    midpoint_distances,
    midpoint_diameter,
    diameter_bounds,
    area_lower_bound,
    log_lower_bound,
    )
from pantsurfaces.experiments import (
    Campaign,
    ScalingFit,
    load_config,
    run_campaign,
    fit_scaling,
    write_csv,
    write_summary,
    )
