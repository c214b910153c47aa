# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

import itertools

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from pmatch.util.match.core import (Alphabet, AArray, InvalidArgumentError, Pattern, Text,
                                    bijection_oracle, check_compatible, p_equivalent,
                                    prev_encode, rename)
from .oracles import all_strings, restricted_growth


def strings(max_sigma=4, max_len=12):
    return st.integers(1, max_sigma).flatmap(
        lambda sigma: st.lists(st.integers(0, sigma - 1), min_size=1, max_size=max_len))


@pytest.mark.parametrize("pattern, a", [
    ("ABC", (1, 2, 3)),
    ("AABA", (1, 1, 3, 2)),
    ("AAAA", (1, 1, 2, 3)),
    ("A", (1,)),
])
def test_prev_encode(pattern, a):
    assert prev_encode(pattern) == AArray(a)


def test_prev_encode_invariants():
    for p in itertools.product(range(3), repeat=6):
        a = prev_encode(p)
        for i in range(1, len(p) + 1):
            ai = a.at(i)
            if ai == i:
                assert p[i - 1] not in p[:i - 1]
            else:
                assert 1 <= ai < i
                assert p[ai - 1] == p[i - 1]
                assert p[i - 1] not in p[ai:i - 1]


@pytest.mark.parametrize("s1, s2, expected", [
    ("ABABCCBA", "XYXYZZYX", True),
    ("ABABCCBA", "BABACCAB", True),
    ("AA", "AB", False),
    ("A", "Z", True),
    ("ABA", "ABB", False),
])
def test_p_equivalent(s1, s2, expected):
    assert p_equivalent(s1, s2) == expected
    assert bijection_oracle(s1, s2) == expected


@pytest.mark.parametrize("check", [p_equivalent, bijection_oracle])
def test_length_mismatch(check):
    with pytest.raises(InvalidArgumentError):
        check("AB", "ABC")


def test_p_equivalent_agrees_with_bijection_oracle():
    # Both predicates are renaming invariant in their first argument
    for length in range(1, 7):
        for s1 in restricted_growth(length, 3):
            for s2 in all_strings(length, 3):
                assert p_equivalent(s1, s2) == bijection_oracle(s1, s2), (s1, s2)


@settings(max_examples=200)
@given(st.integers(7, 40).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(0, 3), min_size=n, max_size=n)] * 2)))
def test_p_equivalent_agrees_with_bijection_oracle_random(pair):
    s1, s2 = pair
    assert p_equivalent(s1, s2) == bijection_oracle(s1, s2)


@given(strings())
def test_p_equivalent_reflexive(s):
    assert p_equivalent(s, s)


@settings(max_examples=300)
@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(0, 1), min_size=n, max_size=n)] * 3)))
def test_p_equivalent_symmetric_transitive(triple):
    s1, s2, s3 = triple
    assert p_equivalent(s1, s2) == p_equivalent(s2, s1)
    if p_equivalent(s1, s2) and p_equivalent(s2, s3):
        assert p_equivalent(s1, s3)


@given(strings(max_sigma=5), st.randoms(use_true_random=False))
def test_prev_encode_renaming_invariance(symbols, rnd):
    mapping = list(range(5))
    rnd.shuffle(mapping)
    pattern = Pattern(symbols, Alphabet(5))
    renamed = rename(pattern, mapping)
    assert prev_encode(renamed) == prev_encode(pattern)
    assert p_equivalent(renamed, pattern)


def test_rename_rejects_non_injective_mapping():
    with pytest.raises(InvalidArgumentError):
        rename(Text.from_string("AB", 2), {0: 1, 1: 1})


def test_text_validation():
    with pytest.raises(InvalidArgumentError):
        Text((0, 1, 4), Alphabet(4))
    with pytest.raises(InvalidArgumentError):
        Pattern((), Alphabet(2))
    with pytest.raises(InvalidArgumentError):
        Alphabet(0)
    with pytest.raises(InvalidArgumentError):
        Alphabet(1 << 17)


def test_text_from_array():
    text = Text(np.array([3, 0, 2], dtype=np.uint16), 320)
    assert text.symbols == (3, 0, 2)
    assert isinstance(text.symbols[0], int)
    assert text.alphabet == Alphabet(320)
    assert text.alphabet.symbol_width() == 2
    assert text.to_array().dtype == np.uint16


def test_text_strings():
    text = Text.from_string("XYXYZZYX")
    assert text.sigma == 26
    assert text.to_string() == "XYXYZZYX"
    assert text.window(3, 3).to_string() == "YZZ"
    with pytest.raises(InvalidArgumentError):
        text.window(6, 3)
    with pytest.raises(InvalidArgumentError):
        Text.from_string("acgt")


def test_check_compatible():
    with pytest.raises(InvalidArgumentError):
        check_compatible(Text((0, 1), Alphabet(2)), Pattern((0,), Alphabet(3)))
