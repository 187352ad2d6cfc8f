#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains the errors and warnings raised by the package.

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )


class PantsError(ValueError):
    """
    Base class for exceptions raised by the package.
    """

class PantsGeometryError(PantsError):
    """
    Base class for exceptions caused by invalid hyperbolic data.
    """

class PantsHexagonError(PantsError):
    """
    Base class for exceptions raised while building the right-angled hexagon.
    """

class PantsOrbitError(PantsError):
    """
    Base class for exceptions raised while enumerating the reflection group
    orbit.
    """

class PantsGraphError(PantsError):
    """
    Base class for exceptions caused by trivalent graphs.
    """

class PantsExplorationError(PantsError):
    """
    Base class for exceptions raised by explorations.
    """

class PantsSearchError(PantsError):
    """
    Base class for exceptions raised by the midpoint distance search.
    """

class PantsCampaignError(PantsError):
    """
    Base class for exceptions raised by experiment campaigns.
    """

class PantsInvalidPointError(PantsGeometryError):
    """
    Error raised when a vector is not a point of the hyperboloid.
    """

class PantsCoincidentPointsError(PantsGeometryError):
    """
    Error raised when a geodesic is requested through a single point.
    """

class PantsDriftError(PantsGeometryError):
    """
    Error raised when a matrix has drifted too far from the Lorentz group to
    be renormalized.
    """

class PantsClosureError(PantsHexagonError):
    """
    Error raised when the turtle walk around the hexagon does not close.
    """

class PantsCenterError(PantsHexagonError):
    """
    Error raised when the computed incenter does not lie inside the hexagon.
    """

class PantsOrbitCollisionError(PantsOrbitError):
    """
    Error raised when two distinct reduced words give the same orbit point.
    """

class PantsCountCapError(PantsOrbitError):
    """
    Error raised when a lattice point count exceeds its cap.
    """

class PantsFitError(PantsOrbitError):
    """
    Error raised when a growth rate fit has too little or inconsistent data.
    """

class PantsDisconnectedError(PantsGraphError):
    """
    Error raised when an operation requiring a connected graph gets a
    disconnected one.
    """

class PantsGraphFormatError(PantsGraphError):
    """
    Error raised when a serialized graph cannot be parsed.
    """

class PantsLedgerError(PantsExplorationError):
    """
    Error raised when the frontier size disagrees with the +1/-2 step ledger.
    """

class PantsPoolDepletedError(PantsExplorationError):
    """
    Error raised when no unpaired half-edge is left to pair with.
    """

class PantsStateCapError(PantsSearchError):
    """
    Error raised when the development search exceeds its state cap.

    The partial :class:`~pantsurfaces.metric.DistanceField` computed so far is
    available as the :attr:`field` attribute; its unsettled entries are upper
    bounds only.
    """
    def __init__(self, message, field=None):
        super(PantsStateCapError, self).__init__(message)
        self.field = field

class PantsKeyCollisionError(PantsSearchError):
    """
    Error raised when two distinct development states share a key.
    """

class PantsBoundsError(PantsSearchError):
    """
    Error raised when a computed lower bound exceeds the upper bound.
    """

class PantsConfigError(PantsCampaignError):
    """
    Error raised when a campaign configuration file is invalid.
    """


class PantsWarning(Warning):
    """
    Base class for warnings raised by the package.
    """

class PantsEstimateWarning(PantsWarning):
    """
    Warning that a reported value is an estimate or a one-sided bound.
    """

class PantsFitWarning(PantsWarning):
    """
    Warning about an unstable growth rate fit.
    """

class PantsRowWarning(PantsWarning):
    """
    Warning that a campaign row recorded an error.
    """

class PantsThresholdWarning(PantsWarning):
    """
    Warning that a statistical campaign gate was not met.
    """
