# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""FASTA ingestion and fixed-length window extraction for DNA experiments.

DNA records are encoded over an alphabet of size 4 (`A, C, G, T` map to
`0, 1, 2, 3`). Any other character (`N` and the other ambiguity codes) is
marked invalid, and windows covering an invalid position are skipped
rather than patched.
"""

from dataclasses import dataclass, replace
from enum import Enum
import itertools
import logging as log

import numpy as np

from pmatch.util.match.core import Alphabet, FormatError, InvalidArgumentError, Pattern, Text
from .textgen import Instance, derive_seed, gen_pattern, plant

BASES = 'ACGT'
DNA_ALPHABET = Alphabet(len(BASES))
# Code of positions holding a non-ACGT character
INVALID = 0xFF

# Byte -> base code lookup table
_LUT = np.full(256, INVALID, dtype=np.uint8)
for _code, _base in enumerate(BASES):
    _LUT[ord(_base)] = _code


@dataclass(frozen=True)
class FastaRecord:
    """A FASTA record: its description line and its upper-cased sequence."""

    header: str
    sequence: str


def parse_fasta(data):
    """Parse FASTA records.

    Sequence lines are concatenated with all whitespace removed and case
    folded to uppercase.

    Args:
        data: FASTA contents, as `bytes` or `str`.

    Returns:
        A list of [FastaRecord][corpus.FastaRecord].
    """
    if isinstance(data, bytes):
        data = data.decode('ascii', errors='replace')
    lines = [line for line in data.splitlines() if line.strip()]
    if not lines:
        raise FormatError('Empty FASTA input')
    if not lines[0].startswith('>'):
        raise FormatError('FASTA sequence data before the first header')
    records = []
    groups = itertools.groupby(lines, lambda line: line.startswith('>'))
    for is_header, group in groups:
        group = list(group)
        if is_header:
            # Consecutive headers describe empty records
            for line in group:
                records.append(FastaRecord(line[1:].strip(), ''))
        else:
            sequence = ''.join(''.join(line.split()) for line in group).upper()
            records[-1] = FastaRecord(records[-1].header, sequence)
    return records


def read_fasta(path):
    with open(path, 'rb') as f:
        return parse_fasta(f.read())


@dataclass(frozen=True)
class EncodedDna:
    """A DNA sequence over σ = 4 with invalid positions marked.

    Attributes:
        codes: Base codes as a uint8 Numpy array; invalid positions hold
            `INVALID`.
        header: Header of the originating record.
    """

    codes: np.ndarray
    header: str = ''

    @property
    def invalid(self):
        """Boolean mask of the invalid positions."""
        return self.codes == INVALID

    def __len__(self):
        return len(self.codes)


def encode_dna(record):
    """Encode a [FastaRecord][corpus.FastaRecord] (or a plain string) over σ = 4."""
    sequence = record.sequence if isinstance(record, FastaRecord) else record
    header = record.header if isinstance(record, FastaRecord) else ''
    raw = np.frombuffer(sequence.encode('ascii', errors='replace'), dtype=np.uint8)
    return EncodedDna(_LUT[raw], header)


def decode_dna(text):
    """Map a [Text][core.Text] over σ = 4 back to its bases."""
    return ''.join(BASES[s] for s in text.symbols)


@dataclass(frozen=True)
class DnaWindow(Text):
    """A [Text][core.Text] cut from an encoded sequence at offset `start`."""

    start: int = 0


class StridePolicy(Enum):
    """Where to look for the next window after a rejected one."""
    # Windows start at multiples of the window length
    FIXED = 'fixed'
    # Restart right after the last invalid position of the rejected window
    RESYNC = 'resync'


def extract_windows(encoded, window_len, count, policy=StridePolicy.FIXED):
    """Extract up to `count` non-overlapping clean windows, left to right.

    Args:
        encoded: An [EncodedDna][corpus.EncodedDna].
        window_len: Length of every window.
        count: Maximum number of windows.
        policy: A [StridePolicy][corpus.StridePolicy].

    Returns:
        A list of [DnaWindow][corpus.DnaWindow]; fewer than `count` if the
        sequence runs out.
    """
    if window_len < 1:
        raise InvalidArgumentError(f'Window length must be positive, got {window_len}')
    policy = StridePolicy(policy)
    codes = encoded.codes
    # bad[k] = number of invalid positions before k
    bad = np.concatenate(([0], np.cumsum(codes == INVALID)))
    windows = []
    start = 0
    skipped = 0
    while len(windows) < count and start + window_len <= len(codes):
        end = start + window_len
        if bad[end] == bad[start]:
            windows.append(DnaWindow(codes[start:end], DNA_ALPHABET, start))
            start = end
            continue
        skipped += 1
        if policy is StridePolicy.FIXED:
            start = end
        else:
            start += int(np.flatnonzero(codes[start:end] == INVALID)[-1]) + 1
    if skipped:
        log.info(f'Skipped {skipped} windows containing non-ACGT characters')
    return windows


def dna_instance(window, m, spec, seed, mode='substring'):
    """Derive a search instance from a DNA window.

    Args:
        window: A [Text][core.Text] over σ = 4.
        m: Pattern length.
        spec: A [PlantSpec][textgen.PlantSpec] for the planted
            occurrences.
        seed: Seed of the pattern offset (or symbols) and of the placement.
        mode: `substring` samples the pattern from the window at a seeded
            offset; `generated` draws it uniformly at random.
    """
    if mode == 'substring':
        rng = np.random.default_rng(seed=derive_seed(seed, 0))
        offset = int(rng.integers(0, window.n - m + 1))
        pattern = Pattern.from_text(window.window(offset, m))
    elif mode == 'generated':
        pattern = gen_pattern(m, DNA_ALPHABET.size, derive_seed(seed, 0))
    else:
        raise InvalidArgumentError(f'Unknown DNA pattern mode {mode}')
    text, planted = plant(window, pattern, replace(spec, seed=derive_seed(seed, 1)))
    return Instance(text, pattern, planted,
                    {'generator': 'dna', 'seed': seed, 'pattern_mode': mode,
                     'plant_count': spec.count, 'distribution': spec.distribution})
