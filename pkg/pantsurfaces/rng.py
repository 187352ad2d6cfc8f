#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# pantsurfaces – random hyperbolic surfaces glued from pairs of pants
#
# This code is licensed under the MIT License.
# You may use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of this software under the terms of the MIT License.
#
# This file contains seeded random streams.

from __future__ import (
    unicode_literals,
    absolute_import,
    print_function,
    division,
    )

import hashlib

import numpy as np


SEED_MASK = (1 << 64) - 1


def derive_seed(seed, *task):
    """
    Return the 64-bit seed of the sub-task identified by *task* (any sequence
    of values with a stable ``repr``) within a run seeded with *seed*.

    The derived seed is ``seed XOR h(task)`` where ``h`` is the 64-bit
    BLAKE2b digest of the task id, so streams of distinct tasks are
    independent and do not depend on the order the tasks run in.
    """
    digest = hashlib.blake2b(repr(task).encode('utf-8'), digest_size=8)
    return (int(seed) & SEED_MASK) ^ int.from_bytes(digest.digest(), 'little')


def make_rng(seed):
    """
    Return a :class:`numpy.random.Generator` (PCG64) seeded with *seed*.
    """
    return np.random.Generator(np.random.PCG64(int(seed) & SEED_MASK))
