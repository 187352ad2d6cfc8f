#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import io
import os
import json
import warnings

import pytest

import pantsurfaces as ps
from pantsurfaces.cli import main
from pantsurfaces.const import EXPLORATION_COLUMNS, DIAMETER_COLUMNS


def setup_function(fn):
    warnings.simplefilter('always')

def run(*args):
    out = io.StringIO()
    status = main(list(args), stdout=out)
    return status, out.getvalue()

def theta_file(tmpdir):
    filename = str(tmpdir.join('theta.txt'))
    ps.write_graph(ps.TrivalentGraph.from_pairs(
        1, [(0, 0, 1, 0), (0, 1, 1, 1), (0, 2, 1, 2)]), filename)
    return filename

def test_hexagon():
    status, out = run('hexagon', '--a', '2', '--json')
    assert status == 0
    result = json.loads(out)
    assert result['b'] == pytest.approx(0.8274, abs=1e-4)
    assert len(result['vertices']) == 6

def test_hexagon_text():
    status, out = run('hexagon', '--a', '2')
    assert status == 0
    values = dict(line.split('=', 1) for line in out.splitlines())
    assert float(values['a']) == 2.0
    assert float(values['b']) == pytest.approx(0.8274, abs=1e-4)
    assert 'vertices[5]' in values
    assert 'b_poles[2]' in values
    assert any(key.startswith('residual.') for key in values)

def test_hexagon_invalid():
    status, out = run('hexagon', '--a', '0')
    assert status == 1
    assert out == ''

def test_count():
    assert run('count', '--a', '2', '--r', '0') == (0, '1\n')
    status, out = run('count', '--a', '2', '--R', '5', '--workers', '1')
    assert int(out) == ps.count(2.0, 5.0)

def test_sample_graph():
    status, out = run('sample-graph', '--n', '5', '--seed', '3')
    assert status == 0
    graph = ps.read_graph(io.StringIO(out))
    assert graph == ps.sample_graph(5, 3)
    assert graph.seed == 3

def test_sample_graph_to_file(tmpdir):
    filename = str(tmpdir.join('g.txt'))
    status, out = run('sample-graph', '--n', '5', '--seed', '3', '--out', filename)
    assert status == 0 and out == ''
    assert ps.read_graph(filename) == ps.sample_graph(5, 3)

def test_explore_on_graph(tmpdir):
    status, out = run('explore', '--a', '2', '--graph', theta_file(tmpdir))
    assert status == 0
    result = json.loads(out)
    assert result['vertices_found'] == 2
    assert result['steps'] == 1
    assert result['radius'] == pytest.approx(
        ps.build_hexagon(2.0).adjacent_midpoint_distance)

def test_explore_online():
    status, out = run('explore', '--n', '100', '--a', '1.5', '--seed', '4')
    assert status == 0
    assert json.loads(out)['tau_target'] == ps.tau_target(100)

def test_explore_needs_a_surface():
    assert run('explore', '--a', '2')[0] == 1

def test_explore_size_mismatch(tmpdir):
    assert run('explore', '--a', '2', '--n', '3',
               '--graph', theta_file(tmpdir))[0] == 1

def test_explore_batch():
    status, out = run(
        'explore-batch', '--n', '50', '--a', '2', '--runs', '3', '--seed', '1')
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == ','.join(EXPLORATION_COLUMNS)
    assert len(lines) == 4

def test_diameter_of_graph(tmpdir):
    status, out = run('diameter', '--a', '2', '--graph', theta_file(tmpdir),
                      '--json')
    assert status == 0
    result = json.loads(out)
    assert result['certified'] == 1
    assert result['genus'] == 2
    assert result['midpoint_diam'] == pytest.approx(
        ps.build_hexagon(2.0).adjacent_midpoint_distance)

def test_diameter_text():
    status, out = run('diameter', '--a', '2', '--n', '6', '--seed', '2')
    assert status == 0
    keys = [line.split('=')[0] for line in out.splitlines()]
    assert keys[:3] == ['seed', 'n', 'a']
    assert set(keys) <= set(DIAMETER_COLUMNS)

def test_diameter_batch():
    status, out = run('diameter', '--a', '2', '--n', '4', '--runs', '2',
                      '--sources', '3')
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == ','.join(DIAMETER_COLUMNS)
    assert len(lines) == 3

def test_delta(tmpdir):
    filename = str(tmpdir.join('counts.csv'))
    status, out = run('delta', '--a', '4', '--csv', filename)
    assert status == 0
    assert 0 < json.loads(out)['delta'] < 1
    with io.open(filename, 'r', encoding='utf-8') as f:
        assert f.readline().strip() == 'R,N'

def test_experiment(tmpdir):
    config = str(tmpdir.join('campaign.cfg'))
    out_csv = str(tmpdir.join('rows.csv'))
    out_json = str(tmpdir.join('summary.json'))
    with io.open(config, 'w', encoding='utf-8') as f:
        f.write('a_grid=2\nn_grid=4\nruns=1\nseed=3\n')
        f.write('out_csv=%s\nout_json=%s\n' % (out_csv, out_json))
    status, out = run('experiment', '--config', config, '--workers', '1')
    assert status == 0
    assert out == ''
    assert os.path.exists(out_csv)
    with io.open(out_json, 'r', encoding='utf-8') as f:
        assert json.load(f)['seed'] == 3

def test_experiment_bad_config(tmpdir):
    config = str(tmpdir.join('campaign.cfg'))
    with io.open(config, 'w', encoding='utf-8') as f:
        f.write('a_grid=2\nn_grid=4\nflavour=mint\n')
    assert run('experiment', '--config', config)[0] == 1

def test_version():
    with pytest.raises(SystemExit):
        main(['--version'])
