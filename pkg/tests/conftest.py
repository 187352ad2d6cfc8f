# -*- coding: utf-8 -*-
"""
Общая настройка тестов: маркер slow для долгих проверок Монте-Карло
"""
import os

import pytest


def pytest_configure(config):
    config.addinivalue_line(
        'markers', 'slow: long Monte Carlo checks, run with PANTSURFACES_SLOW=1')


def pytest_collection_modifyitems(config, items):
    if os.environ.get('PANTSURFACES_SLOW') == '1':
        return
    skip = pytest.mark.skip(reason='set PANTSURFACES_SLOW=1 to run')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)
