#!/usr/bin/env python3
# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Command-line front end.

Ties input generation, FASTA ingestion, searching and benchmarking into
reproducible workflows:

    pmatch gen random --n 100000 --sigma 4 --m 32 --seed 1 --out inst
    pmatch search --algo pm-auto --text inst.text.bin --pattern inst.pattern.bin
    pmatch bench --config util/bench/configs/desk_param.json --output-dir results
    pmatch report --records results/desk_param.csv --format markdown

Occurrences are printed one 0-based start index per line on standard
output. Exit codes are 0 on success, 1 on invalid input (bad flags,
unreadable or malformed files, unsatisfiable parameters) and 2 when an
internal invariant is violated.
"""

import argparse
import json
import logging as log
from pathlib import Path
import sys

from jsonschema import ValidationError
from termcolor import cprint

from pmatch.util.bench.harness import Manifest, load_config, run_suite, write_outputs
from pmatch.util.bench.report import FORMATS, emit_report, print_summary, read_records
from pmatch.util.datagen.corpus import StridePolicy, encode_dna, extract_windows, read_fasta
from pmatch.util.datagen.formats import read_text, write_sidecar, write_text
from pmatch.util.datagen.textgen import (DISTRIBUTIONS, PlantSpec, gen_periodic_instance,
                                         gen_random_instance)
from pmatch.util.match import ALGORITHMS, get_algorithm
from pmatch.util.match.core import InternalError, Pattern, PmatchError

PROG = 'pmatch'


class Parser(argparse.ArgumentParser):
    """Argument parser exiting with code 1 on usage errors."""

    def error(self, message):
        self.exit(1, f'{PROG}: error: {message}\n')


def parser():
    """Command-line parser of all subcommands."""
    parser = Parser(prog=PROG, description='Naive vs automaton string matching')
    parser.add_argument('--verbose', '-v', action='store_true', help='Log debug messages')
    commands = parser.add_subparsers(dest='command', required=True)

    # gen
    gen = commands.add_parser('gen', help='Generate a text and a pattern')
    families = gen.add_subparsers(dest='family', required=True)
    rnd = families.add_parser('random', help='Uniform random text with planted occurrences')
    rnd.add_argument('--n', type=int, required=True, help='Text length')
    rnd.add_argument('--sigma', type=int, required=True, help='Alphabet size')
    rnd.add_argument('--m', type=int, required=True, help='Pattern length')
    rnd.add_argument('--count', type=int, default=100, help='Planted occurrences')
    rnd.add_argument('--distribution', choices=DISTRIBUTIONS, default='uniform',
                     help='Placement of the planted occurrences')
    rnd.add_argument('--skew-fraction', type=float, default=0.5,
                     help='Share of the plants in the trailing region (skewed only)')
    rnd.add_argument('--skew-region', type=float, default=0.25,
                     help='Trailing share of the text (skewed only)')
    rnd.add_argument('--seed', type=int, default=0)
    rnd.add_argument('--out', type=Path, required=True,
                     help='Output prefix: writes PREFIX.text.bin and PREFIX.pattern.bin')
    rnd.set_defaults(func=cmd_gen_random)
    per = families.add_parser('periodic', help='Text A^n, pattern A^(m-1) B')
    per.add_argument('--n', type=int, required=True, help='Text length')
    per.add_argument('--m', type=int, required=True, help='Pattern length')
    per.add_argument('--out', type=Path, required=True, help='Output prefix')
    per.set_defaults(func=cmd_gen_periodic)

    # ingest
    ingest = commands.add_parser('ingest', help='Convert external corpora')
    formats = ingest.add_subparsers(dest='format', required=True)
    fasta = formats.add_parser('fasta', help='Cut clean DNA windows out of a FASTA file')
    fasta.add_argument('--in', dest='input', type=Path, required=True, help='FASTA file')
    fasta.add_argument('--window', type=int, required=True, help='Window length')
    fasta.add_argument('--count', type=int, required=True, help='Maximum number of windows')
    fasta.add_argument('--policy', choices=[p.value for p in StridePolicy],
                       default=StridePolicy.FIXED.value,
                       help='Where to resume after a window containing non-ACGT characters')
    fasta.add_argument('--out', type=Path, required=True, help='Output directory')
    fasta.set_defaults(func=cmd_ingest_fasta)

    # search
    search = commands.add_parser('search', help='Search a pattern in a text')
    search.add_argument('--algo', choices=list(ALGORITHMS), required=True)
    search.add_argument('--text', type=Path, required=True)
    search.add_argument('--pattern', type=Path, required=True)
    search.add_argument('--stats', type=Path,
                        help='Write the search statistics here instead of the error stream')
    search.set_defaults(func=cmd_search)

    # bench
    bench = commands.add_parser('bench', help='Run a benchmark configuration')
    bench.add_argument('--config', type=Path, required=True, help='JSON5 configuration file')
    bench.add_argument('--scale', type=float, help='Override the text length scale factor')
    bench.add_argument('--output-dir', type=Path, default=Path('.'))
    bench.add_argument('--no-progress', action='store_true', help='Hide the progress bar')
    bench.set_defaults(func=cmd_bench)

    # report
    report = commands.add_parser('report', help='Re-render a CSV records file')
    report.add_argument('--records', type=Path, required=True)
    report.add_argument('--format', choices=FORMATS, default='markdown')
    report.add_argument('--out', type=Path, help='Output file, standard output by default')
    report.set_defaults(func=cmd_report)
    return parser


def _write_instance(prefix, instance):
    prefix = Path(prefix)
    if prefix.parent != Path('.'):
        prefix.parent.mkdir(parents=True, exist_ok=True)
    text_path = prefix.with_name(prefix.name + '.text.bin')
    pattern_path = prefix.with_name(prefix.name + '.pattern.bin')
    write_text(text_path, instance.text)
    write_sidecar(text_path, **instance.sidecar())
    write_text(pattern_path, instance.pattern)
    write_sidecar(pattern_path, sigma=instance.pattern.sigma, m=instance.pattern.m,
                  **instance.metadata)
    cprint(f'Wrote {text_path} and {pattern_path}', 'green')


def cmd_gen_random(args):
    spec = PlantSpec(count=args.count, distribution=args.distribution,
                     fraction=args.skew_fraction, region=args.skew_region)
    instance = gen_random_instance(args.n, args.sigma, args.m, spec, args.seed)
    _write_instance(args.out, instance)
    return 0


def cmd_gen_periodic(args):
    _write_instance(args.out, gen_periodic_instance(args.n, args.m))
    return 0


def cmd_ingest_fasta(args):
    args.out.mkdir(parents=True, exist_ok=True)
    written = 0
    for idx, record in enumerate(read_fasta(args.input)):
        if written >= args.count:
            break
        windows = extract_windows(encode_dna(record), args.window, args.count - written,
                                  args.policy)
        for window in windows:
            path = args.out / f'window_{written:04d}.bin'
            write_text(path, window)
            write_sidecar(path, sigma=window.sigma, n=window.n, generator='fasta',
                          source=str(args.input), record=idx, header=record.header,
                          start=window.start)
            written += 1
    if written < args.count:
        log.warning(f'Extracted {written} of {args.count} requested windows')
    cprint(f'Wrote {written} windows to {args.out}', 'green')
    return 0


def cmd_search(args):
    search = get_algorithm(args.algo)
    text = read_text(args.text)
    pattern = read_text(args.pattern, cls=Pattern)
    outcome = search(text, pattern)
    sys.stdout.write(''.join(f'{s}\n' for s in outcome.occurrences))
    stats = {'algorithm': args.algo, 'n': text.n, 'm': pattern.m,
             'occurrences': len(outcome.occurrences), **outcome.stats.to_dict()}
    dump = json.dumps(stats, indent=4) + '\n'
    if args.stats is not None:
        args.stats.write_text(dump)
    else:
        sys.stderr.write(dump)
    return 0


def cmd_bench(args):
    config = load_config(args.config, args.scale)
    manifest = Manifest(config)
    records = run_suite(config, manifest, progress=not args.no_progress)
    print_summary(records, [f"sigma={c['sigma']} m={c['m']} {c['distribution']}: {c['reason']}"
                            for c in manifest.skipped])
    for path in write_outputs(records, manifest, args.output_dir):
        cprint(f'Wrote {path}', 'green')
    if not records:
        cprint('No cell could be measured', 'red', attrs=['bold'])
        return 1
    return 0


def cmd_report(args):
    data = emit_report(read_records(args.records), args.format)
    if args.out is not None:
        args.out.write_bytes(data)
    else:
        sys.stdout.write(data.decode('utf-8'))
    return 0


def main(argv=None):
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    log.basicConfig(level=log.DEBUG if args.verbose else log.WARNING,
                    format='%(levelname)s: %(message)s')
    try:
        return args.func(args)
    except InternalError as e:
        print(f'{PROG}: internal error: {e}', file=sys.stderr)
        return 2
    except (PmatchError, ValidationError, OSError, ValueError) as e:
        message = e.message if isinstance(e, ValidationError) else str(e)
        print(f'{PROG}: error: {message}', file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
