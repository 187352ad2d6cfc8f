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

import os
import runpy

import pytest

import pantsurfaces as ps


DOCS = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'docs')


@pytest.fixture(scope='module')
def conf():
    return runpy.run_path(os.path.join(DOCS, 'conf.py'))

def test_conf_metadata(conf):
    assert conf['project'] == 'Pantsurfaces'
    assert conf['release'] == ps.__version__
    assert 'sphinx.ext.mathjax' in conf['extensions']

def test_conf_paths_exist(conf):
    assert 'setup' not in conf
    for path in conf['html_static_path']:
        assert os.path.isdir(os.path.join(DOCS, path))
    for source, _, _, _, _ in conf['man_pages']:
        assert os.path.exists(os.path.join(DOCS, source + '.rst'))
    assert os.path.exists(
        os.path.join(DOCS, conf['master_doc'] + conf['source_suffix']))
