# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Seeded generation of benchmark inputs.

Three input families are generated:

1. uniformly random texts with a random pattern planted at non-overlapping
   positions, either uniformly over the text or with a share of the plants
   congregated in a trailing region of the text;
2. the periodic worst case, text `A^n` and pattern `A^(m-1) B`;
3. (see [corpus][corpus]) DNA windows with planted patterns.

All randomness comes from Numpy's `default_rng`, i.e. the PCG64 generator,
seeded explicitly: every generator is a pure function of its arguments.
"""

from dataclasses import dataclass, field, replace
from math import ceil

import numpy as np
from sortedcontainers import SortedList

from pmatch.util.match.core import (Alphabet, InvalidArgumentError, Pattern, Text,
                                    check_compatible)

DISTRIBUTIONS = ('uniform', 'skewed')
# Rejection sampling attempts allowed per planted occurrence
PLANT_ATTEMPTS_PER_OCCURRENCE = 10_000


def derive_seed(seed, *keys):
    """Derive an independent 64-bit seed from a base seed and integer keys."""
    state = np.random.SeedSequence([int(seed), *(int(k) for k in keys)]).generate_state(
        1, dtype=np.uint64)
    return int(state[0])


def _check_sigma(sigma):
    if sigma < 2:
        raise InvalidArgumentError(f'Alphabet size must be at least 2, got {sigma}')


def gen_uniform_text(n, sigma, seed):
    """Generate `n` i.i.d. uniform symbols over `[0, sigma)`."""
    _check_sigma(sigma)
    if n < 1:
        raise InvalidArgumentError(f'Text length must be positive, got {n}')
    rng = np.random.default_rng(seed=seed)
    return Text(rng.integers(0, sigma, size=n), Alphabet(sigma))


def gen_pattern(m, sigma, seed):
    """Generate a pattern of `m` i.i.d. uniform symbols over `[0, sigma)`."""
    _check_sigma(sigma)
    if m < 1:
        raise InvalidArgumentError(f'Pattern length must be positive, got {m}')
    rng = np.random.default_rng(seed=seed)
    return Pattern(rng.integers(0, sigma, size=m), Alphabet(sigma))


def gen_periodic(n, m):
    """Generate the periodic worst case: text `A^n`, pattern `A^(m-1) B`."""
    if m < 2:
        raise InvalidArgumentError(f'Periodic pattern length must be at least 2, got {m}')
    if m > n:
        raise InvalidArgumentError(f'Pattern length {m} exceeds text length {n}')
    alphabet = Alphabet(2)
    return Text((0,) * n, alphabet), Pattern((0,) * (m - 1) + (1,), alphabet)


@dataclass(frozen=True)
class PlantSpec:
    """How to plant pattern occurrences into a text.

    Attributes:
        count: Number of occurrences to plant.
        distribution: `uniform`, or `skewed` to place `ceil(fraction *
            count)` plants within the trailing `region` share of the text
            and the rest before it.
        fraction: Share of the plants congregated at the end (skewed only).
        region: Trailing share of the text receiving them (skewed only).
        seed: RNG seed of the placement.
    """

    count: int = 100
    distribution: str = 'uniform'
    fraction: float = 0.5
    region: float = 0.25
    seed: int = 0

    def __post_init__(self):
        if self.count < 0:
            raise InvalidArgumentError(f'Plant count must be non-negative, got {self.count}')
        if self.distribution not in DISTRIBUTIONS:
            raise InvalidArgumentError(
                f'Unknown distribution {self.distribution}, choose among {DISTRIBUTIONS}')
        for name in ('fraction', 'region'):
            value = getattr(self, name)
            if not 0 < value <= 1:
                raise InvalidArgumentError(f'Plant {name} must be in (0, 1], got {value}')

    @property
    def label(self):
        return self.distribution


def _fits(starts, s, m):
    idx = starts.bisect_left(s)
    if idx > 0 and starts[idx - 1] + m > s:
        return False
    if idx < len(starts) and starts[idx] < s + m:
        return False
    return True


def _plant_ranges(n, m, spec):
    last = n - m
    if spec.distribution == 'uniform':
        return [(0, last)] * spec.count
    n_end = ceil(spec.fraction * spec.count)
    region_start = ceil((1 - spec.region) * n)
    if n_end and (region_start > last or n_end * m > n - region_start):
        raise InvalidArgumentError(
            f'{n_end} plants of length {m} do not fit in the last {n - region_start} symbols')
    elsewhere = (0, region_start - 1) if region_start > 0 else (0, last)
    return [(region_start, last)] * n_end + [elsewhere] * (spec.count - n_end)


def plant(text, pattern, spec):
    """Copy the pattern verbatim into the text at non-overlapping positions.

    Positions are sampled by rejection until they do not overlap any
    previous plant; after `10^4 * count` rejected samples the spec is
    deemed infeasible.

    Returns:
        A tuple of the new [Text][core.Text], of the same length, and the
        sorted tuple of planted start indices.
    """
    check_compatible(text, pattern)
    n, m = text.n, pattern.m
    if spec.count * m > n:
        raise InvalidArgumentError(
            f'Cannot plant {spec.count} non-overlapping occurrences of length {m} '
            f'in a text of length {n}')
    if spec.count == 0:
        return text, ()
    rng = np.random.default_rng(seed=spec.seed)
    starts = SortedList()
    attempts = 0
    max_attempts = PLANT_ATTEMPTS_PER_OCCURRENCE * spec.count
    for lo, hi in _plant_ranges(n, m, spec):
        while True:
            if attempts >= max_attempts:
                raise InvalidArgumentError(
                    f'Placed only {len(starts)} of {spec.count} plants after {attempts} attempts')
            attempts += 1
            s = int(rng.integers(lo, hi + 1))
            if _fits(starts, s, m):
                starts.add(s)
                break
    symbols = list(text.symbols)
    for s in starts:
        symbols[s:s + m] = pattern.symbols
    return Text(tuple(symbols), text.alphabet), tuple(starts)


@dataclass(frozen=True)
class Instance:
    """A generated search instance together with its provenance."""

    text: Text
    pattern: Pattern
    planted: tuple = ()
    metadata: dict = field(default_factory=dict)

    def sidecar(self):
        """Metadata to store next to the instance's text file."""
        return {'sigma': self.text.sigma, 'n': self.text.n, 'm': self.pattern.m,
                'planted': list(self.planted), **self.metadata}


def gen_random_instance(n, sigma, m, spec, seed):
    """Generate a uniform random text and pattern, and plant the pattern per `spec`.

    Text, pattern and placement draw from independent seeds derived from
    `seed`; the seed of `spec` is not used.
    """
    text = gen_uniform_text(n, sigma, derive_seed(seed, 0))
    pattern = gen_pattern(m, sigma, derive_seed(seed, 1))
    text, planted = plant(text, pattern, replace(spec, seed=derive_seed(seed, 2)))
    metadata = {'generator': 'random', 'seed': seed, 'plant_count': spec.count,
                'distribution': spec.distribution}
    if spec.distribution == 'skewed':
        metadata.update(fraction=spec.fraction, region=spec.region)
    return Instance(text, pattern, planted, metadata)


def gen_periodic_instance(n, m):
    text, pattern = gen_periodic(n, m)
    return Instance(text, pattern, (), {'generator': 'periodic'})
