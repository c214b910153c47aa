# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Symbol sequences, the prev-encoding and the p-equivalence predicate.

Texts and patterns are sequences of integer symbol codes in `[0, σ)`, where
`σ` is the size of their [Alphabet][core.Alphabet]. Codes are not
characters: alphabets of up to 2^16 symbols are supported.

All positions are 0-based, in code and in every machine-readable output.
The only exception is the [AArray][core.AArray], which keeps the 1-based
values of its textbook definition: `A[i]` is the largest `k < i` with
`p_k = p_i`, or `i` itself when `p_i` has no earlier occurrence. Position
`i` of the A-array is therefore stored at tuple index `i - 1`.

Two strings of equal length p-match (are p-equivalent) iff a bijection on
symbols maps one onto the other, which is the case iff their
prev-encodings are equal. [p_equivalent()][core.p_equivalent] checks the
latter, [bijection_oracle()][core.bijection_oracle] independently checks
the former; the test suite holds them against each other.
"""

from dataclasses import dataclass
import string

import numpy as np
from sortedcontainers import SortedDict


# Largest supported alphabet
MAX_SIGMA = 1 << 16
# Letter codes used by `Text.from_string()` and `Text.to_string()`
LETTERS = string.ascii_uppercase


class PmatchError(Exception):
    """Base class of all errors raised by this package."""


class InvalidArgumentError(PmatchError, ValueError):
    """An operation was invoked outside of its preconditions."""


class FormatError(PmatchError, ValueError):
    """An input file or byte string is malformed."""


class InternalError(PmatchError, RuntimeError):
    """An internal invariant was violated. This is a bug, not an input error."""


@dataclass(frozen=True)
class Alphabet:
    """An alphabet of `size` symbol codes `0, ..., size - 1`."""

    size: int

    def __post_init__(self):
        if not 1 <= self.size <= MAX_SIGMA:
            raise InvalidArgumentError(f'Alphabet size {self.size} not in [1, {MAX_SIGMA}]')

    def __contains__(self, code):
        return 0 <= code < self.size

    def symbol_width(self):
        """Bytes per symbol in the binary text format."""
        return 1 if self.size <= 256 else 2


@dataclass(frozen=True)
class Text:
    """An immutable sequence of symbol codes over an alphabet.

    Attributes:
        symbols: The symbol codes. Any sequence or Numpy array is
            accepted on construction and stored as a tuple of ints.
        alphabet: The alphabet all codes must belong to.
    """

    symbols: tuple
    alphabet: Alphabet

    def __post_init__(self):
        symbols = self.symbols
        if isinstance(symbols, np.ndarray):
            symbols = tuple(symbols.tolist())
        elif not isinstance(symbols, tuple):
            symbols = tuple(int(s) for s in symbols)
        object.__setattr__(self, 'symbols', symbols)
        if isinstance(self.alphabet, int):
            object.__setattr__(self, 'alphabet', Alphabet(self.alphabet))
        if symbols and (min(symbols) < 0 or max(symbols) >= self.alphabet.size):
            bad = next(s for s in symbols if s not in self.alphabet)
            raise InvalidArgumentError(
                f'Symbol code {bad} outside of alphabet of size {self.alphabet.size}')

    @property
    def n(self):
        return len(self.symbols)

    @property
    def sigma(self):
        return self.alphabet.size

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def window(self, start, length):
        """Return the factor of length `length` starting at `start`."""
        if start < 0 or start + length > self.n:
            raise InvalidArgumentError(
                f'Window [{start}, {start + length}) outside of text of length {self.n}')
        return Text(self.symbols[start:start + length], self.alphabet)

    def to_array(self):
        """Return the symbols as a Numpy array of the narrowest fitting type."""
        dtype = np.uint8 if self.alphabet.symbol_width() == 1 else np.uint16
        return np.fromiter(self.symbols, dtype=dtype, count=self.n)

    @classmethod
    def from_string(cls, s, sigma=len(LETTERS)):
        """Build a sequence from a string of capital letters (A=0, B=1, ...)."""
        try:
            codes = tuple(LETTERS.index(c) for c in s)
        except ValueError:
            raise InvalidArgumentError(f'Only capital letters can be encoded, got {s!r}')
        return cls(codes, Alphabet(sigma))

    def to_string(self):
        """Inverse of `from_string()`."""
        if self.sigma > len(LETTERS):
            raise InvalidArgumentError(f'Alphabet of size {self.sigma} has no letter encoding')
        return ''.join(LETTERS[s] for s in self.symbols)


@dataclass(frozen=True)
class Pattern(Text):
    """A non-empty [Text][core.Text]."""

    def __post_init__(self):
        super().__post_init__()
        if not self.symbols:
            raise InvalidArgumentError('Patterns must contain at least one symbol')

    @property
    def m(self):
        return len(self.symbols)

    @classmethod
    def from_text(cls, text):
        return cls(text.symbols, text.alphabet)


@dataclass(frozen=True)
class AArray:
    """Prev-encoding of a pattern, with 1-based values.

    `a[i - 1]` holds `A[i]` for pattern position `i` (1-based).
    """

    a: tuple

    def __len__(self):
        return len(self.a)

    def __getitem__(self, idx):
        return self.a[idx]

    def at(self, i):
        """Return `A[i]` for the 1-based position `i`."""
        return self.a[i - 1]

    def is_first(self, i):
        """Whether the symbol at 1-based position `i` has no earlier occurrence."""
        return self.a[i - 1] == i


def symbols_of(s):
    """Return the symbol tuple of a Text, a letter string or a plain sequence."""
    if isinstance(s, Text):
        return s.symbols
    elif isinstance(s, str):
        return Text.from_string(s).symbols
    else:
        return tuple(s)


def check_compatible(text, pattern):
    """Raise if `text` and `pattern` are not over the same alphabet."""
    if text.alphabet != pattern.alphabet:
        raise InvalidArgumentError(
            f'Alphabet mismatch: text over σ={text.sigma}, pattern over σ={pattern.sigma}')


def prev_encode(pattern):
    """Compute the A-array of a pattern.

    The pattern is scanned left to right, keeping the last occurrence of
    every distinct symbol scanned so far in an ordered map; looking up the
    symbol at position `i` gives `A[i]`.

    Args:
        pattern: A [Pattern][core.Pattern], letter string or sequence of
            codes.

    Returns:
        The [AArray][core.AArray] of the pattern.
    """
    last = SortedDict()
    a = []
    for i, symbol in enumerate(symbols_of(pattern), start=1):
        a.append(last.get(symbol, i))
        last[symbol] = i
    return AArray(tuple(a))


def _check_same_length(s1, s2):
    if len(s1) != len(s2):
        raise InvalidArgumentError(f'Length mismatch: {len(s1)} != {len(s2)}')


def p_equivalent(s1, s2):
    """Whether two equal-length strings p-match, by prev-encoding equality."""
    s1, s2 = symbols_of(s1), symbols_of(s2)
    _check_same_length(s1, s2)
    return prev_encode(s1) == prev_encode(s2)


def bijection_oracle(s1, s2):
    """Whether a symbol bijection maps `s1` onto `s2`.

    Builds the forward and backward symbol maps position by position and
    fails on the first conflict in either direction. Does not use the
    prev-encoding.
    """
    s1, s2 = symbols_of(s1), symbols_of(s2)
    _check_same_length(s1, s2)
    forward = {}
    backward = {}
    for x, y in zip(s1, s2):
        if forward.setdefault(x, y) != y or backward.setdefault(y, x) != x:
            return False
    return True


def rename(text, mapping):
    """Apply a symbol renaming to a text.

    Args:
        text: A [Text][core.Text] (or [Pattern][core.Pattern]).
        mapping: Dict or sequence mapping every code of the text to its
            new code. Must be injective on the codes in use.
    """
    renamed = tuple(int(mapping[s]) for s in text.symbols)
    used = set(text.symbols)
    if len({int(mapping[s]) for s in used}) != len(used):
        raise InvalidArgumentError('Renaming is not injective on the symbols in use')
    return type(text)(renamed, text.alphabet)
