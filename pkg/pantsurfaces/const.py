#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains the numeric constants shared by the package.

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )


POINT_TOLERANCE     = 1e-9  # hyperboloid membership of points and poles
ISOMETRY_TOLERANCE  = 1e-8  # m^T J m = J for accepted isometries
RENORMALIZED_TOLERANCE = 1e-12  # m^T J m = J after renormalize
DRIFT_LIMIT         = 1e-3  # beyond this an isometry cannot be repaired
ARCCOSH_SLACK       = 1e-6  # arguments in [1 - slack, 1] are read as 1
DIST_TOLERANCE      = 1e-9  # distances within this of R are inside the ball
KEY_GRID            = 1e-6  # rounding grid of isometry/point keys
RENORMALIZE_EVERY   = 16    # compositions between two renormalizations

DEFAULT_COUNT_CAP   = 10**8  # maximal N_a(R) enumerated by count
DEFAULT_STATE_CAP   = 10**7  # maximal development states in one search
MAX_ORACLE_LENGTH   = 14     # longest word enumerated by the brute force oracle

DEFAULT_EPSILON     = 0.1
DELTA_WINDOW        = 0.4   # delta fits use [0.4 R_max, R_max] by default
DELTA_INSTABILITY   = 0.1   # half-window slope gap that triggers a warning
DEFAULT_BOOTSTRAP   = 1000

SAMPLED_DIAMETER_VERTICES = 2 * 10**4  # graphs above this are sampled
SAMPLED_DIAMETER_SOURCES  = 64

WORKERS_ENV = 'PANTSURFACES_WORKERS'

# genus() result for a disconnected graph; never a number
DISCONNECTED = 'disconnected'

VERSION = '0.1'
CSV_SCHEMA_VERSION = 1

# Engineering thresholds of the campaign gates; reported, never enforced
SCALING_RATIO_RANGE = (0.75, 1.35)
DISCONNECTED_FRACTION_LIMIT = 0.1

CAMPAIGN_COLUMNS = (
    'seed',
    'n',
    'a',
    'replicate',
    'genus',
    'connected',
    'graph_diam',
    'graph_ratio',
    'midpoint_diam',
    'upper',
    'lower',
    'certified',
    'steps',
    'vertices_found',
    'bad_phase1',
    'bad_total',
    'radius',
    'disconnected',
    'error',
    )

EXPLORATION_COLUMNS = (
    'seed',
    'n',
    'a',
    'steps',
    'vertices_found',
    'bad_phase1',
    'bad_total',
    'radius',
    'disconnected',
    )

DIAMETER_COLUMNS = (
    'seed',
    'n',
    'a',
    'genus',
    'connected',
    'graph_diam',
    'midpoint_diam',
    'upper',
    'lower',
    'certified',
    )
