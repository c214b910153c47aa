# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Naive and KMP-automaton exact string matching.

Both searches report every 0-based start index `j` with
`text[j:j + m] == pattern` and count every symbol equality test they
perform, including the test that fails.

The KMP automaton has states `0, ..., m`. From state `q` the success
transition tests the next text symbol against `pattern[q]` (0-based); on a
match both the state and the text pointer advance. On a mismatch in state
0 only the text pointer advances, otherwise the automaton follows the
failure link `f[q - 1]` without consuming a text symbol. Reaching state `m`
reports an occurrence and continues from `f[m - 1]`. Every test either
consumes a text symbol or strictly lowers the state, which bounds the
number of comparisons by `2n`.
"""

from dataclasses import dataclass

from .core import check_compatible
from .stats import ComparisonStats, SearchOutcome, Stopwatch


@dataclass(frozen=True)
class FailureTable:
    """Failure function of a pattern.

    `f[i - 1]` is the length of the longest proper prefix of the first
    `i` pattern symbols that is also a suffix of them.
    """

    f: tuple

    def __len__(self):
        return len(self.f)

    def __getitem__(self, idx):
        return self.f[idx]


def build_failure(pattern, with_stats=False):
    """Build the failure function by walking failure chains, in O(m).

    Args:
        pattern: A non-empty [Pattern][core.Pattern].
        with_stats: Also return the comparisons spent on construction.

    Returns:
        The [FailureTable][exact.FailureTable], or a tuple of it and a
        [ComparisonStats][stats.ComparisonStats] if `with_stats` is set.
    """
    p = pattern.symbols
    m = len(p)
    f = [0] * m
    comparisons = 0
    k = 0
    for i in range(1, m):
        while True:
            comparisons += 1
            if p[i] == p[k]:
                k += 1
                break
            if k == 0:
                break
            k = f[k - 1]
        f[i] = k
    table = FailureTable(tuple(f))
    if with_stats:
        return table, ComparisonStats(symbol_comparisons=comparisons)
    return table


def naive_exact_search(text, pattern):
    """Slide the pattern over every text location and compare left to right.

    Each alignment costs the index of its first mismatch plus one, or `m`
    on a full match.
    """
    check_compatible(text, pattern)
    t, p = text.symbols, pattern.symbols
    n, m = len(t), len(p)
    stats = ComparisonStats()
    occurrences = []
    comparisons = 0
    with Stopwatch(stats):
        for j in range(n - m + 1):
            i = 0
            while i < m:
                comparisons += 1
                if t[j + i] != p[i]:
                    break
                i += 1
            if i == m:
                occurrences.append(j)
    stats.symbol_comparisons = comparisons
    return SearchOutcome(tuple(occurrences), stats)


def kmp_search(text, pattern):
    """Scan the text once with the KMP automaton of the pattern.

    The failure function is built inside the timed region, so `elapsed`
    covers construction and scan; `symbol_comparisons` counts scan tests
    only and never exceeds `2n`.
    """
    check_compatible(text, pattern)
    t, p = text.symbols, pattern.symbols
    n, m = len(t), len(p)
    stats = ComparisonStats()
    if m > n:
        return SearchOutcome((), stats)
    occurrences = []
    comparisons = 0
    with Stopwatch(stats):
        f = build_failure(pattern).f
        q = 0
        j = 0
        while j < n:
            comparisons += 1
            if t[j] == p[q]:
                j += 1
                q += 1
                if q == m:
                    occurrences.append(j - m)
                    q = f[m - 1]
            elif q == 0:
                j += 1
            else:
                q = f[q - 1]
    stats.symbol_comparisons = comparisons
    return SearchOutcome(tuple(occurrences), stats)
