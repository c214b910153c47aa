# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

from .core import (Alphabet, Text, Pattern, AArray, PmatchError, InvalidArgumentError,
                   FormatError, InternalError, prev_encode, p_equivalent, bijection_oracle)
from .exact import naive_exact_search, kmp_search, build_failure
from .param import naive_p_search, pkmp_search, build_p_failure

# Search algorithms by name
ALGORITHMS = {
    'exact-naive': naive_exact_search,
    'exact-kmp': kmp_search,
    'pm-naive': naive_p_search,
    'pm-auto': pkmp_search,
}

# (naive, automaton) algorithm pair of every matching model
PAIRS = {
    'exact': ('exact-naive', 'exact-kmp'),
    'param': ('pm-naive', 'pm-auto'),
}


def get_algorithm(name):
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise InvalidArgumentError(f'Unknown algorithm {name}, choose among {list(ALGORITHMS)}')


__all__ = ['Alphabet', 'Text', 'Pattern', 'AArray', 'PmatchError', 'InvalidArgumentError',
           'FormatError', 'InternalError', 'prev_encode', 'p_equivalent', 'bijection_oracle',
           'naive_exact_search', 'kmp_search', 'build_failure', 'naive_p_search',
           'pkmp_search', 'build_p_failure', 'ALGORITHMS', 'PAIRS', 'get_algorithm']
