# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Binary text format and JSON metadata sidecars.

A text file consists of an 18-byte little-endian header followed by the
symbol payload:

| offset | size | field                                  |
| ------ | ---- | -------------------------------------- |
| 0      | 4    | magic `PMTX`                           |
| 4      | 1    | version, `0x01`                        |
| 5      | 4    | alphabet size σ (uint32)               |
| 9      | 1    | symbol width: 1 if σ ≤ 256, else 2     |
| 10     | 8    | length n (uint64)                      |
| 18     | n·w  | symbol codes, fixed width, little-endian |

Every text file may be accompanied by a sidecar with the same stem and a
`.json` suffix, recording how it was generated.
"""

import json
from pathlib import Path
import struct

import numpy as np

from pmatch.util.match.core import Alphabet, FormatError, PmatchError, Text

MAGIC = b'PMTX'
VERSION = 1
HEADER = struct.Struct('<4sBIBQ')
PAYLOAD_DTYPES = {1: '<u1', 2: '<u2'}


def dumps(text):
    """Serialize a [Text][core.Text] to bytes."""
    width = text.alphabet.symbol_width()
    header = HEADER.pack(MAGIC, VERSION, text.sigma, width, text.n)
    payload = np.asarray(text.symbols, dtype=PAYLOAD_DTYPES[width]).tobytes()
    return header + payload


def loads(data, cls=Text):
    """Deserialize bytes produced by [dumps()][formats.dumps].

    Args:
        data: The raw bytes.
        cls: [Text][core.Text] or [Pattern][core.Pattern].
    """
    if len(data) < HEADER.size:
        raise FormatError(f'Truncated header: {len(data)} bytes')
    magic, version, sigma, width, n = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FormatError(f'Bad magic {magic!r}, expected {MAGIC!r}')
    if version != VERSION:
        raise FormatError(f'Unsupported format version {version}')
    if width not in PAYLOAD_DTYPES or width != (1 if sigma <= 256 else 2):
        raise FormatError(f'Symbol width {width} inconsistent with alphabet size {sigma}')
    payload = data[HEADER.size:]
    if len(payload) != n * width:
        raise FormatError(f'Payload of {len(payload)} bytes, expected {n * width}')
    symbols = np.frombuffer(payload, dtype=PAYLOAD_DTYPES[width])
    try:
        return cls(symbols, Alphabet(sigma))
    except PmatchError as e:
        raise FormatError(str(e))


def write_text(path, text):
    with open(path, 'wb') as f:
        f.write(dumps(text))


def read_text(path, cls=Text):
    with open(path, 'rb') as f:
        return loads(f.read(), cls)


def sidecar_path(path):
    """Path of the metadata sidecar of a text file."""
    return Path(path).with_suffix('.json')


def write_sidecar(path, **metadata):
    """Dump generation metadata (σ, n, m, seed, planted, ...) next to a text file."""
    with open(sidecar_path(path), 'w') as f:
        json.dump(metadata, f, indent=4)


def read_sidecar(path):
    with open(sidecar_path(path), 'r') as f:
        return json.load(f)
