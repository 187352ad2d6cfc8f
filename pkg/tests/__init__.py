# -*- coding: utf-8 -*-
"""
Пакет с тестами для библиотеки pantsurfaces
"""
