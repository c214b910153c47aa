# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Sliding last-occurrence window over a text."""

from sortedcontainers import SortedDict


class LastOccurrenceWindow:
    """Last occurrence of every symbol among the last `width` scanned symbols.

    An ordered map from symbol code to the largest text index it was seen
    at. Entries are never evicted eagerly: an entry older than the window
    start `index - width + 1` is treated as absent on lookup.

    Attributes:
        width: The window width, i.e. the pattern length.
        index: 0-based text index of the most recently scanned symbol, or
            -1 before the first `advance()`.
    """

    def __init__(self, width):
        self.width = width
        self.index = -1
        self._last = SortedDict()
        self._previous = None

    @property
    def start(self):
        """First text index covered by the window."""
        return max(0, self.index - self.width + 1)

    def advance(self, symbol):
        """Scan the next text symbol."""
        self.index += 1
        self._previous = self._last.get(symbol)
        self._last[symbol] = self.index

    def previous_occurrence(self):
        """Last index, before the current one, of the current symbol.

        Returns None if the symbol does not occur earlier in the window.
        """
        if self._previous is None or self._previous < self.start:
            return None
        return self._previous

    def get(self, symbol):
        """Last index of `symbol` within the window, or None."""
        idx = self._last.get(symbol)
        if idx is None or idx < self.start:
            return None
        return idx

    def __contains__(self, symbol):
        return self.get(symbol) is not None

    def distinct(self):
        """Map of the distinct symbols in the window to their last index."""
        start = self.start
        return {symbol: idx for symbol, idx in self._last.items() if idx >= start}
