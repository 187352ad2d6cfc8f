#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains the command line interface.

"""
The ``pantsurfaces`` command. Results go to stdout (or the files named by the
options), diagnostics to the log on stderr.
"""

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import io
import sys
import csv
import json
import logging
import argparse

from pantsurfaces.errors import PantsError
from pantsurfaces.const import (
    VERSION,
    DEFAULT_EPSILON,
    DEFAULT_COUNT_CAP,
    EXPLORATION_COLUMNS,
    DIAMETER_COLUMNS,
    )
from pantsurfaces.rng import derive_seed
from pantsurfaces.hexagon import build_hexagon
from pantsurfaces.hextree import count, estimate_delta
from pantsurfaces.graphs import (
    Surface,
    sample_graph,
    read_graph,
    write_graph,
    graph_diameter,
    )
from pantsurfaces.exploration import explore
from pantsurfaces.metric import midpoint_diameter, diameter_bounds
from pantsurfaces.experiments import (
    load_config,
    run_experiment,
    workers_from_env,
    )


logger = logging.getLogger(__name__)


def sources_type(value):
    if value == 'all':
        return value
    try:
        result = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError('expected "all" or an integer')
    if result < 1:
        raise argparse.ArgumentTypeError('expected a positive integer')
    return result


def _dump(obj, stdout):
    json.dump(obj, stdout, indent=2, sort_keys=True, default=str)
    stdout.write('\n')


def _csv_writer(filename, stdout, columns):
    f = io.open(filename, 'w', encoding='utf-8', newline='') \
        if filename else stdout
    writer = csv.DictWriter(f, fieldnames=columns, lineterminator='\n',
                            extrasaction='ignore')
    writer.writeheader()
    return f, writer


def do_hexagon(args, stdout):
    info = build_hexagon(args.a).to_dict()
    if args.json:
        _dump(info, stdout)
        return
    for key in ('a', 'b', 'inradius_a', 'inradius_b'):
        stdout.write('%s=%.15g\n' % (key, info[key]))
    for key in ('center', 'vertices', 'a_poles', 'b_poles'):
        rows = [info[key]] if key == 'center' else info[key]
        for i, row in enumerate(rows):
            stdout.write('%s[%d]=%s\n' % (
                key, i, ' '.join('%.15g' % x for x in row)))
    for key, value in sorted(info['residuals'].items()):
        stdout.write('residual.%s=%.3g\n' % (key, value))


def do_count(args, stdout):
    stdout.write('%d\n' % count(
        args.a, args.R, cap=args.cap, workers=args.workers))


def do_delta(args, stdout):
    estimate = estimate_delta(
        args.a, R_min=args.rmin, R_max=args.rmax, step=args.step,
        cap=args.cap)
    if args.csv:
        with io.open(args.csv, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(('R', 'N'))
            writer.writerows(estimate.counts)
    _dump(estimate.to_dict(), stdout)


def do_sample_graph(args, stdout):
    graph = sample_graph(args.n, args.seed)
    write_graph(graph, args.out if args.out else stdout)


def _load_graph(args):
    if args.graph:
        graph = read_graph(args.graph)
        if args.n is not None and args.n != graph.n:
            raise PantsError(
                'graph file has n=%d, not %d' % (graph.n, args.n))
        return graph
    if args.n is None:
        raise PantsError('either --n or --graph is required')
    return None


def do_explore(args, stdout):
    graph = _load_graph(args)
    n = graph.n if graph is not None else args.n
    report = explore(
        n, args.a, args.eps, seed=args.seed, graph=graph,
        exhaust=args.exhaust, segment_distance=args.segment_distance)
    _dump(report.to_dict(), stdout)


def do_explore_batch(args, stdout):
    f, writer = _csv_writer(args.out, stdout, EXPLORATION_COLUMNS)
    try:
        for run in range(args.runs):
            report = explore(
                args.n, args.a, args.eps,
                seed=derive_seed(args.seed, 'explore', run),
                segment_distance=args.segment_distance)
            writer.writerow(report.row())
    finally:
        if f is not stdout:
            f.close()


def _diameter_row(graph, a, sources, seed):
    surface = Surface(graph, a)
    row = {
        'seed': graph.seed,
        'n': graph.n,
        'a': a,
        'genus': surface.genus,
        'connected': int(surface.connected),
        }
    if surface.connected:
        diam = graph_diameter(graph)
        bounds = diameter_bounds(
            surface, midpoint_diameter(surface, sources=sources, seed=seed),
            graph_diam=diam)
        row.update(
            graph_diam=diam,
            midpoint_diam=bounds.midpoint_diameter,
            upper=bounds.upper,
            lower=bounds.lower,
            certified=int(bounds.certified))
    return row


def do_diameter(args, stdout):
    if args.runs:
        f, writer = _csv_writer(args.out, stdout, DIAMETER_COLUMNS)
        try:
            for run in range(args.runs):
                seed = derive_seed(args.seed, 'diameter', run)
                writer.writerow(_diameter_row(
                    sample_graph(args.n, seed), args.a, args.sources, seed))
        finally:
            if f is not stdout:
                f.close()
        return
    graph = _load_graph(args)
    if graph is None:
        graph = sample_graph(args.n, args.seed)
    row = _diameter_row(graph, args.a, args.sources, args.seed)
    if args.json:
        _dump(row, stdout)
    else:
        for key in DIAMETER_COLUMNS:
            if key in row:
                stdout.write('%s=%s\n' % (key, row[key]))


def do_experiment(args, stdout):
    campaign = load_config(args.config)
    _, summary = run_experiment(campaign, workers=args.workers)
    if not campaign.out_json:
        _dump(summary, stdout)


def get_parser():
    parser = argparse.ArgumentParser(
        prog='pantsurfaces',
        description='Random hyperbolic surfaces glued from pairs of pants')
    parser.add_argument(
        '--version', action='version', version='%(prog)s ' + VERSION)
    parser.add_argument(
        '-v', '--verbose', action='store_true', help='log debug messages')
    parser.add_argument(
        '-q', '--quiet', action='store_true', help='log warnings only')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    cmd = commands.add_parser('hexagon', help='describe the hexagon')
    cmd.add_argument('--a', type=float, required=True)
    cmd.add_argument('--json', action='store_true')
    cmd.set_defaults(func=do_hexagon)

    cmd = commands.add_parser('count', help='count orbit points in a ball')
    cmd.add_argument('--a', type=float, required=True)
    cmd.add_argument('--r', '--R', dest='R', type=float, required=True)
    cmd.add_argument('--cap', type=int, default=DEFAULT_COUNT_CAP)
    cmd.add_argument('--workers', type=int, default=None)
    cmd.set_defaults(func=do_count)

    cmd = commands.add_parser('delta', help='estimate the critical exponent')
    cmd.add_argument('--a', type=float, required=True)
    cmd.add_argument('--rmin', type=float, default=None)
    cmd.add_argument('--rmax', type=float, default=None)
    cmd.add_argument('--step', type=float, default=None)
    cmd.add_argument('--cap', type=int, default=DEFAULT_COUNT_CAP)
    cmd.add_argument('--csv', help='write the (R, N) pairs to this file')
    cmd.set_defaults(func=do_delta)

    cmd = commands.add_parser('sample-graph', help='sample a trivalent graph')
    cmd.add_argument('--n', type=int, required=True)
    cmd.add_argument('--seed', type=int, required=True)
    cmd.add_argument('--out')
    cmd.set_defaults(func=do_sample_graph)

    for name, func in (
            ('explore', do_explore), ('explore-batch', do_explore_batch)):
        cmd = commands.add_parser(name, help='explore a random surface')
        cmd.add_argument('--n', type=int, required=name == 'explore-batch')
        cmd.add_argument('--a', type=float, required=True)
        cmd.add_argument('--eps', type=float, default=DEFAULT_EPSILON)
        cmd.add_argument('--seed', type=int, default=0)
        cmd.add_argument('--segment-distance', action='store_true')
        if name == 'explore':
            cmd.add_argument('--graph', help='replay the gluings of this file')
            cmd.add_argument('--exhaust', action='store_true')
        else:
            cmd.add_argument('--runs', type=int, required=True)
            cmd.add_argument('--out')
        cmd.set_defaults(func=func)

    cmd = commands.add_parser('diameter', help='bound the surface diameter')
    cmd.add_argument('--n', type=int)
    cmd.add_argument('--a', type=float, required=True)
    cmd.add_argument('--seed', type=int, default=0)
    cmd.add_argument('--graph')
    cmd.add_argument('--sources', type=sources_type, default='all')
    cmd.add_argument('--json', action='store_true')
    cmd.add_argument('--runs', type=int, default=0,
                     help='write a CSV of this many samples instead')
    cmd.add_argument('--out')
    cmd.set_defaults(func=do_diameter)

    cmd = commands.add_parser('experiment', help='run a campaign')
    cmd.add_argument('--config', required=True)
    cmd.add_argument('--workers', type=int, default=None)
    cmd.set_defaults(func=do_experiment)
    return parser


def main(args=None, stdout=None):
    parser = get_parser()
    args = parser.parse_args(args)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else
        logging.WARNING if args.quiet else logging.INFO,
        format='%(levelname)s: %(message)s')
    if stdout is None:
        stdout = sys.stdout
    try:
        if getattr(args, 'workers', 1) is None:
            args.workers = workers_from_env()
        args.func(args, stdout)
    except PantsError as exc:
        logger.error('%s', exc)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
