# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Comparison-count instrumentation shared by all search algorithms."""

from dataclasses import dataclass, field, asdict
import time


@dataclass
class ComparisonStats:
    """Cost counters of a single search call.

    Attributes:
        symbol_comparisons: Number of symbol equality (or ≅) tests,
            including the test that fails.
        aux_lookups: Number of queries to the sliding last-occurrence
            window (parameterized automaton only).
        elapsed: Wall time of the call in nanoseconds, measured on a
            monotonic clock.
    """

    symbol_comparisons: int = 0
    aux_lookups: int = 0
    elapsed: int = 0

    def to_dict(self):
        return asdict(self)


@dataclass
class SearchOutcome:
    """Occurrences (sorted, 0-based start indices) and the cost of finding them."""

    occurrences: tuple = ()
    stats: ComparisonStats = field(default_factory=ComparisonStats)

    def to_dict(self):
        return {'occurrences': list(self.occurrences), 'stats': self.stats.to_dict()}


class Stopwatch:
    """Context manager storing the elapsed monotonic time into a stats object."""

    def __init__(self, stats):
        self.stats = stats

    def __enter__(self):
        self.start = time.perf_counter_ns()
        return self.stats

    def __exit__(self, *exc):
        self.stats.elapsed = time.perf_counter_ns() - self.start
        return False
