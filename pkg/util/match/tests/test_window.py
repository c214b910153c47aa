# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

from hypothesis import given, strategies as st

from pmatch.util.match.window import LastOccurrenceWindow


def test_lazy_eviction():
    window = LastOccurrenceWindow(3)
    for symbol in (5, 1, 2):
        window.advance(symbol)
    assert window.distinct() == {5: 0, 1: 1, 2: 2}
    window.advance(1)
    # 5 fell out of the window, 1 was seen again
    assert window.start == 1
    assert 5 not in window
    assert window.get(1) == 3
    assert window.previous_occurrence() == 1
    assert window.distinct() == {1: 3, 2: 2}


def test_previous_occurrence_outside_window():
    window = LastOccurrenceWindow(2)
    for symbol in (7, 8, 9):
        window.advance(symbol)
    assert window.previous_occurrence() is None
    window.advance(7)
    # 7 was last seen at index 0, before the window start 2
    assert window.previous_occurrence() is None


@given(st.integers(1, 6), st.lists(st.integers(0, 4), min_size=1, max_size=40))
def test_window_contents(width, symbols):
    window = LastOccurrenceWindow(width)
    for j, symbol in enumerate(symbols):
        window.advance(symbol)
        recent = symbols[max(0, j - width + 1):j + 1]
        expected = {s: max(0, j - width + 1) + len(recent) - 1 - recent[::-1].index(s)
                    for s in set(recent)}
        assert window.index == j
        assert window.distinct() == expected
        before = symbols[max(0, j - width + 1):j]
        if symbol in before:
            assert window.previous_occurrence() == max(0, j - width + 1) + len(before) - 1 \
                - before[::-1].index(symbol)
        else:
            assert window.previous_occurrence() is None
