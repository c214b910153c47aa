# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Parameterized matching: naive and automaton-based.

The automaton-based search is exactly the KMP search with every equality
test `x = y` replaced by the ≅ test of
[compare_pt()][param.compare_pt]; its failure function is built with
[compare_pp()][param.compare_pp] in place of equality. Both tests answer
from the pattern's [AArray][core.AArray]:

- if the pattern symbol has an earlier occurrence inside the current
  alignment, the aligned text symbol must equal the text symbol aligned
  with that earlier occurrence (an O(1) test);
- otherwise the aligned text symbol must not occur earlier in the
  alignment, which the text scan answers with one lookup into a
  [LastOccurrenceWindow][window.LastOccurrenceWindow], in O(log σ).

Positions follow the listing they are taken from: pattern positions `i`
are 1-based, text indices `j` are 0-based. A pattern position `i`
aligned with text index `j` puts the alignment start at `j - i + 1`.
"""

from dataclasses import dataclass

from .core import InternalError, InvalidArgumentError, Text, check_compatible, prev_encode
from .stats import ComparisonStats, SearchOutcome, Stopwatch
from .window import LastOccurrenceWindow


@dataclass(frozen=True)
class PFailureTable:
    """P-failure function of a pattern.

    `pf[i - 1]` is the largest `l < i` such that the first `l` pattern
    symbols p-match the `l` symbols ending at position `i`.
    """

    pf: tuple

    def __len__(self):
        return len(self.pf)

    def __getitem__(self, idx):
        return self.pf[idx]


def compare_pt(i, j, text, pattern, a, window, stats=None):
    """Test `p_i ≅ t_j` for the alignment placing position `i` at index `j`.

    Args:
        i: 1-based pattern position.
        j: 0-based text index. The window must have scanned the text up
            to and including `j`.
        text: The [Text][core.Text] or its symbol tuple.
        pattern: The [Pattern][core.Pattern].
        a: The pattern's [AArray][core.AArray].
        window: The [LastOccurrenceWindow][window.LastOccurrenceWindow]
            of the scan.
        stats: Optional [ComparisonStats][stats.ComparisonStats] to
            charge one symbol comparison (and one window lookup, if
            taken) to.
    """
    if window.index != j or j - i + 1 < 0:
        raise InternalError(
            f'Window at text index {window.index} cannot answer p_{i} ≅ t_{j}')
    t = text.symbols if isinstance(text, Text) else text
    if stats is not None:
        stats.symbol_comparisons += 1
    ai = a.a[i - 1]
    if ai == i:
        if stats is not None:
            stats.aux_lookups += 1
        prev = window.previous_occurrence()
        return prev is None or prev < j - i + 1
    return t[j] == t[j - i + ai]


def compare_pp(i, j, pattern, a, stats=None):
    """Test `p_i ≅ p_j`, with pattern position `i` aligned over prefix position `j`.

    Used while building the p-failure function: the first `j` pattern
    symbols are aligned with the `j` symbols ending at position `i`, and
    `p_i` plays the role of the text symbol.

    Args:
        i: 1-based position of the symbol being matched.
        j: 1-based prefix position, `j <= i`.
        pattern: The [Pattern][core.Pattern].
        a: The pattern's [AArray][core.AArray].
        stats: Optional stats to charge one comparison to.
    """
    if j > i:
        raise InvalidArgumentError(f'Prefix position {j} beyond position {i}')
    if stats is not None:
        stats.symbol_comparisons += 1
    ai = a.a[i - 1]
    # p_i has no earlier occurrence among the j aligned symbols
    if ai == i or i - ai >= j:
        return a.a[j - 1] == j
    p = pattern.symbols
    return p[j - 1] == p[j - i + ai - 1]


def build_p_failure(pattern, a=None, with_stats=False):
    """Build the p-failure function, in O(m log σ).

    Mirrors [build_failure()][exact.build_failure] with
    [compare_pp()][param.compare_pp] in place of equality.

    Args:
        pattern: A non-empty [Pattern][core.Pattern].
        a: The pattern's A-array, computed if not given.
        with_stats: Also return the comparisons spent on construction.
    """
    if a is None:
        a = prev_encode(pattern)
    m = pattern.m
    pf = [0] * m
    stats = ComparisonStats()
    k = 0
    for i in range(2, m + 1):
        while True:
            if compare_pp(i, k + 1, pattern, a, stats):
                k += 1
                break
            if k == 0:
                break
            k = pf[k - 1]
        pf[i - 1] = k
    table = PFailureTable(tuple(pf))
    if with_stats:
        return table, stats
    return table


def pkmp_search(text, pattern):
    """Scan the text once with the parameterized KMP automaton.

    Finds every `j` such that the pattern p-matches `text[j:j + m]`.
    A full match continues from `pf[m - 1]`. The A-array and the
    p-failure function are built inside the timed region;
    `symbol_comparisons` counts the [compare_pt()][param.compare_pt] calls
    of the scan and never exceeds `2n`.
    """
    check_compatible(text, pattern)
    t = text.symbols
    n, m = len(t), pattern.m
    stats = ComparisonStats()
    if m > n:
        return SearchOutcome((), stats)
    occurrences = []
    with Stopwatch(stats):
        a = prev_encode(pattern)
        pf = build_p_failure(pattern, a).pf
        window = LastOccurrenceWindow(m)
        window.advance(t[0])
        q = 0
        j = 0
        while j < n:
            if compare_pt(q + 1, j, t, pattern, a, window, stats):
                q += 1
                if q == m:
                    occurrences.append(j - m + 1)
                    q = pf[m - 1]
            elif q > 0:
                q = pf[q - 1]
                continue
            j += 1
            if j < n:
                window.advance(t[j])
    return SearchOutcome(tuple(occurrences), stats)


def _compare_aligned(i, j, t, a, seen):
    # `seen` holds the text symbols of the alignment before index j
    ai = a[i - 1]
    if ai == i:
        return t[j] not in seen
    return t[j] == t[j - i + ai]


def naive_p_search(text, pattern):
    """Slide the pattern over every text location, testing ≅ left to right.

    The same loop as [naive_exact_search()][exact.naive_exact_search],
    with the ≅ relation in place of equality. The relation state (the
    text symbols seen in the alignment) is reset at every alignment.
    """
    check_compatible(text, pattern)
    t = text.symbols
    n, m = len(t), pattern.m
    stats = ComparisonStats()
    occurrences = []
    comparisons = 0
    with Stopwatch(stats):
        a = prev_encode(pattern).a
        for s in range(n - m + 1):
            seen = set()
            i = 1
            while i <= m:
                j = s + i - 1
                comparisons += 1
                if not _compare_aligned(i, j, t, a, seen):
                    break
                seen.add(t[j])
                i += 1
            if i > m:
                occurrences.append(s)
    stats.symbol_comparisons = comparisons
    return SearchOutcome(tuple(occurrences), stats)
