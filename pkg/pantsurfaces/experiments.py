#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains reproducible Monte Carlo campaigns.

"""
Monte Carlo campaigns over grids of boundary lengths and sizes.

Every replicate of every ``(a, n)`` cell gets its own seed derived from the
campaign seed, so rows can be computed in any order, in parallel, and replayed
one at a time.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import io
import os
import csv
import json
import math
import logging
import warnings
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from pantsurfaces.errors import (
    PantsError,
    PantsConfigError,
    PantsFitError,
    PantsRowWarning,
    PantsThresholdWarning,
    )
from pantsurfaces.const import (
    VERSION,
    CSV_SCHEMA_VERSION,
    CAMPAIGN_COLUMNS,
    DEFAULT_EPSILON,
    DEFAULT_BOOTSTRAP,
    WORKERS_ENV,
    SCALING_RATIO_RANGE,
    DISCONNECTED_FRACTION_LIMIT,
    )
from pantsurfaces.rng import derive_seed, make_rng
from pantsurfaces.graphs import (
    Surface,
    sample_graph,
    graph_diameter,
    graph_ratio,
    )
from pantsurfaces.exploration import explore
from pantsurfaces.metric import midpoint_diameter, diameter_bounds
from pantsurfaces.hextree import estimate_delta


logger = logging.getLogger(__name__)


def workers_from_env(default=1):
    """
    Return the worker count from the ``PANTSURFACES_WORKERS`` environment
    variable.
    """
    value = os.environ.get(WORKERS_ENV)
    if not value:
        return default
    try:
        workers = int(value)
    except ValueError:
        raise PantsConfigError(
            '%s must be an integer, not %r' % (WORKERS_ENV, value))
    if workers < 1:
        raise PantsConfigError('%s must be positive' % WORKERS_ENV)
    return workers


class Campaign(object):
    """
    A grid of ``(a, n)`` cells with :attr:`runs` replicates each.
    """

    def __init__(self, a_grid, n_grid, runs=1, seed=0,
                 epsilon=DEFAULT_EPSILON, out_csv=None, out_json=None,
                 sources='all', boot=DEFAULT_BOOTSTRAP):
        self.a_grid = [float(a) for a in a_grid]
        self.n_grid = [int(n) for n in n_grid]
        self.runs = int(runs)
        self.seed = int(seed)
        self.epsilon = float(epsilon)
        self.out_csv = out_csv
        self.out_json = out_json
        self.sources = sources
        self.boot = int(boot)
        if not self.a_grid or not self.n_grid:
            raise PantsConfigError('a_grid and n_grid must not be empty')
        if any(not a > 0 for a in self.a_grid):
            raise PantsConfigError('boundary lengths must be positive')
        if any(n < 1 for n in self.n_grid):
            raise PantsConfigError('sizes must be at least 1')
        if self.runs < 1:
            raise PantsConfigError('runs must be at least 1')
        if not 0 < self.epsilon < 0.5:
            raise PantsConfigError('epsilon must lie in (0, 1/2)')
        if sources != 'all' and int(sources) < 1:
            raise PantsConfigError('sources must be "all" or positive')

    def cells(self):
        """
        Yield ``(a, n, replicate)`` in row order.
        """
        for a in self.a_grid:
            for n in self.n_grid:
                for replicate in range(self.runs):
                    yield a, n, replicate

    def header(self):
        return [
            'pantsurfaces %s schema=%d' % (VERSION, CSV_SCHEMA_VERSION),
            'seed=%d a_grid=%s n_grid=%s runs=%d epsilon=%g sources=%s' % (
                self.seed,
                ','.join('%g' % a for a in self.a_grid),
                ','.join('%d' % n for n in self.n_grid),
                self.runs, self.epsilon, self.sources),
            ]

    def __repr__(self):
        return '<Campaign a=%r n=%r runs=%d seed=%d>' % (
            self.a_grid, self.n_grid, self.runs, self.seed)


_CONFIG_KEYS = {
    'a_grid': lambda v: [float(x) for x in v.split(',') if x.strip()],
    'n_grid': lambda v: [int(x) for x in v.split(',') if x.strip()],
    'runs': int,
    'seed': int,
    'epsilon': float,
    'out_csv': str,
    'out_json': str,
    'sources': lambda v: 'all' if v == 'all' else int(v),
    'boot': int,
    }


def load_config(filename_or_obj):
    """
    Read a :class:`Campaign` from a flat ``key=value`` file. Blank lines and
    lines starting with ``#`` are ignored.
    """
    if isinstance(filename_or_obj, (str, bytes)):
        with io.open(filename_or_obj, 'r', encoding='utf-8') as f:
            text = f.read()
    else:
        text = filename_or_obj.read()
    values = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        key, sep, value = line.partition('=')
        key = key.strip()
        value = value.strip()
        if not sep:
            raise PantsConfigError('line %d is not key=value' % number)
        if key not in _CONFIG_KEYS:
            raise PantsConfigError('unknown key %r on line %d' % (key, number))
        try:
            values[key] = _CONFIG_KEYS[key](value)
        except ValueError:
            raise PantsConfigError(
                'invalid value %r for %s on line %d' % (value, key, number))
    for key in ('a_grid', 'n_grid'):
        if key not in values:
            raise PantsConfigError('missing key %r' % key)
    return Campaign(**values)


def row_seed(seed, a, n, replicate):
    return derive_seed(seed, 'row', float(a), int(n), int(replicate))


def run_row(seed, a, n, replicate, epsilon=DEFAULT_EPSILON, sources='all'):
    """
    Compute the row of replicate *replicate* of cell ``(a, n)`` in a campaign
    seeded with *seed*.
    """
    return replay_row(
        row_seed(seed, a, n, replicate), a, n, replicate, epsilon, sources)


def replay_row(seed, a, n, replicate=0, epsilon=DEFAULT_EPSILON,
               sources='all'):
    """
    Compute one campaign row from its recorded *seed*. Failures are recorded
    in the ``error`` column and reported with
    :exc:`~pantsurfaces.PantsRowWarning`.
    """
    row = dict.fromkeys(CAMPAIGN_COLUMNS)
    row.update(seed=seed, n=n, a=a, replicate=replicate)
    try:
        graph = sample_graph(n, row['seed'])
        surface = Surface(graph, a)
        row['genus'] = surface.genus
        row['connected'] = int(surface.connected)
        report = explore(n, a, epsilon, seed=row['seed'], graph=graph)
        row.update(
            steps=report.steps,
            vertices_found=report.vertices_found,
            bad_phase1=report.bad_phase1,
            bad_total=report.bad_total,
            radius=report.radius,
            disconnected=int(report.disconnected))
        if surface.connected:
            diam = graph_diameter(graph)
            row['graph_diam'] = diam
            row['graph_ratio'] = graph_ratio(graph, diam)
            with warnings.catch_warnings():
                warnings.simplefilter('ignore')
                midpoints = midpoint_diameter(
                    surface, sources=sources, seed=row['seed'])
            bounds = diameter_bounds(surface, midpoints, graph_diam=diam)
            row.update(
                midpoint_diam=bounds.midpoint_diameter,
                upper=bounds.upper,
                lower=bounds.lower,
                certified=int(bounds.certified))
    except (PantsError, ValueError, ArithmeticError) as exc:
        row['error'] = '%s: %s' % (exc.__class__.__name__, exc)
        warnings.warn(PantsRowWarning(
            'row a=%g n=%d replicate=%d failed: %s' % (
                a, n, replicate, row['error'])))
    return row


def _row_job(args):
    return run_row(*args)


def run_campaign(campaign, workers=None):
    """
    Return the list of rows of *campaign* in ``(a, n, replicate)`` order.

    Rows are computed by *workers* processes (default from the environment);
    the result does not depend on their number.
    """
    if workers is None:
        workers = workers_from_env()
    jobs = [
        (campaign.seed, a, n, replicate, campaign.epsilon, campaign.sources)
        for a, n, replicate in campaign.cells()
        ]
    logger.info('running %d rows with %d workers', len(jobs), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(_row_job, jobs))
    return [_row_job(job) for job in jobs]


def write_csv(rows, campaign, filename_or_obj):
    """
    Write *rows* as CSV preceded by ``#`` comment lines recording the
    version, schema and campaign parameters.
    """
    def write(f):
        for line in campaign.header():
            f.write('# %s\n' % line)
        writer = csv.DictWriter(
            f, fieldnames=CAMPAIGN_COLUMNS, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({
                key: '' if value is None else value
                for key, value in row.items()
                })

    if isinstance(filename_or_obj, (str, bytes)):
        with io.open(filename_or_obj, 'w', encoding='utf-8', newline='') as f:
            write(f)
    else:
        write(filename_or_obj)


def _usable(row, a):
    return (
        not row.get('error') and
        row.get('connected') == 1 and
        row.get('midpoint_diam') is not None and
        math.isclose(row['a'], a))


class ScalingFit(object):
    """
    Fit of the median midpoint diameter against ``ln n`` at one boundary
    length.

    .. attribute:: slope

        Least-squares slope.

    .. attribute:: slope_ci

        Bootstrap 95% interval of the slope, widened if needed to contain it.

    .. attribute:: delta_hat

        Estimated critical exponent at :attr:`a`.

    .. attribute:: ratio

        ``slope * delta_hat``, which should be close to 1.
    """

    def __init__(self, a, slope, intercept, slope_ci, delta_hat, n_values,
                 medians):
        self.a = a
        self.slope = slope
        self.intercept = intercept
        self.slope_ci = slope_ci
        self.delta_hat = delta_hat
        self.ratio = slope * delta_hat
        self.n_values = n_values
        self.medians = medians

    def to_dict(self):
        return {
            'a': self.a,
            'slope': self.slope,
            'intercept': self.intercept,
            'slope_ci': list(self.slope_ci),
            'delta_hat': self.delta_hat,
            'ratio': self.ratio,
            'n_values': list(self.n_values),
            'medians': list(self.medians),
            }

    def __repr__(self):
        return '<ScalingFit a=%g slope=%.4f ratio=%.4f>' % (
            self.a, self.slope, self.ratio)


def fit_scaling(rows, a, delta_hat=None, boot=DEFAULT_BOOTSTRAP, seed=0):
    """
    Fit the median midpoint diameter of the connected rows at *a* against
    ``ln n`` and return a :class:`ScalingFit`.

    Needs at least 4 sizes with 10 usable replicates each; raises
    :exc:`~pantsurfaces.PantsFitError` otherwise. *delta_hat* defaults to
    :func:`~pantsurfaces.hextree.estimate_delta` at *a*.
    """
    samples = defaultdict(list)
    for row in rows:
        if _usable(row, a):
            samples[int(row['n'])].append(float(row['midpoint_diam']))
    sizes = sorted(n for n, values in samples.items() if len(values) >= 10)
    if len(sizes) < 4:
        raise PantsFitError(
            'need 4 sizes with 10 replicates at a=%g, have %d' %
            (a, len(sizes)))
    x = np.log(np.array(sizes, dtype=float))
    groups = [np.array(samples[n]) for n in sizes]
    medians = np.array([np.median(g) for g in groups])
    slope, intercept = np.polyfit(x, medians, 1)

    rng = make_rng(derive_seed(seed, 'bootstrap', float(a)))
    slopes = np.empty(boot)
    for b in range(boot):
        resampled = [
            np.median(rng.choice(g, size=len(g), replace=True))
            for g in groups
            ]
        slopes[b] = np.polyfit(x, resampled, 1)[0]
    low, high = np.percentile(slopes, [2.5, 97.5])
    ci = (float(min(low, slope)), float(max(high, slope)))
    if not slope > 0:
        warnings.warn(PantsThresholdWarning(
            'non-positive diameter slope %.4f at a=%g' % (slope, a)))
    if delta_hat is None:
        delta_hat = estimate_delta(a).delta
    return ScalingFit(
        a=a,
        slope=float(slope),
        intercept=float(intercept),
        slope_ci=ci,
        delta_hat=float(delta_hat),
        n_values=sizes,
        medians=medians.tolist())


def summarize(rows, campaign, delta_hats=None):
    """
    Return the JSON-ready summary of a campaign: per-cell connectivity,
    disconnection-event and median frequencies, and a scaling fit per
    boundary length where the data allow one.
    """
    delta_hats = delta_hats or {}
    cells = []
    for a in campaign.a_grid:
        for n in campaign.n_grid:
            cell = [r for r in rows if r['n'] == n and math.isclose(r['a'], a)]
            if not cell:
                continue
            connected = [r for r in cell if r.get('connected') == 1]
            usable = [r for r in connected if _usable(r, a)]
            event = [r for r in cell if r.get('disconnected') == 1]
            entry = {
                'a': a,
                'n': n,
                'runs': len(cell),
                'errors': sum(1 for r in cell if r.get('error')),
                'connected_fraction': len(connected) / len(cell),
                'disconnection_event_fraction': len(event) / len(cell),
                'disconnection_order_estimate': 1.0 / n ** 2,
                'median_midpoint_diam': (
                    float(np.median([r['midpoint_diam'] for r in usable]))
                    if usable else None),
                'median_graph_ratio': (
                    float(np.median([r['graph_ratio'] for r in usable]))
                    if usable else None),
                'lower_le_upper': all(r['lower'] <= r['upper'] for r in usable),
                }
            if entry['disconnection_event_fraction'] > \
                    DISCONNECTED_FRACTION_LIMIT and n >= 64:
                warnings.warn(PantsThresholdWarning(
                    'disconnection events in %.1f%% of runs at a=%g n=%d' %
                    (100 * entry['disconnection_event_fraction'], a, n)))
            cells.append(entry)
    fits = []
    for a in campaign.a_grid:
        try:
            fit = fit_scaling(
                rows, a, delta_hat=delta_hats.get(a), boot=campaign.boot,
                seed=campaign.seed)
        except PantsFitError as exc:
            fits.append({'a': a, 'error': str(exc)})
            continue
        result = fit.to_dict()
        low, high = SCALING_RATIO_RANGE
        result['ratio_in_range'] = low <= fit.ratio <= high
        if not result['ratio_in_range']:
            warnings.warn(PantsThresholdWarning(
                'scaling ratio %.3f at a=%g outside [%g, %g]' %
                (fit.ratio, a, low, high)))
        fits.append(result)
    return {
        'version': VERSION,
        'schema': CSV_SCHEMA_VERSION,
        'seed': campaign.seed,
        'a_grid': campaign.a_grid,
        'n_grid': campaign.n_grid,
        'runs': campaign.runs,
        'epsilon': campaign.epsilon,
        'sources': campaign.sources,
        'thresholds': {
            'scaling_ratio': list(SCALING_RATIO_RANGE),
            'disconnected_fraction': DISCONNECTED_FRACTION_LIMIT,
            },
        'cells': cells,
        'fits': fits,
        }


def write_summary(summary, filename_or_obj):
    if isinstance(filename_or_obj, (str, bytes)):
        with io.open(filename_or_obj, 'w', encoding='utf-8') as f:
            json.dump(summary, f, indent=2, sort_keys=True)
    else:
        json.dump(summary, filename_or_obj, indent=2, sort_keys=True)


def run_experiment(campaign, workers=None):
    """
    Run *campaign*, write its CSV and JSON outputs where configured, and
    return ``(rows, summary)``.
    """
    rows = run_campaign(campaign, workers=workers)
    if campaign.out_csv:
        write_csv(rows, campaign, campaign.out_csv)
    summary = summarize(rows, campaign)
    if campaign.out_json:
        write_summary(summary, campaign.out_json)
    return rows, summary
