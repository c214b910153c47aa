# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Timed, repeated trials of the matching algorithms over parameter grids.

A benchmark is described by a JSON5 configuration file, validated against
`schema/bench_config.schema.json` (missing keys take their schema
defaults). For every `(σ, m, distribution)` cell of the configured grid,
[run_suite()][harness.run_suite] generates `repeats` independently seeded
inputs, times the naive algorithm and the automaton on each of them, checks
that both report the same occurrences, and aggregates the measurements into
a [BenchRecord][report.BenchRecord].

Check out `configs/desk_exact.json` for an example configuration, and
`configs/full_grid_exact.json` for the full 10 x 6 grid.

Timed runs are strictly serial. Cells whose inputs cannot be generated
(e.g. too many planted occurrences for the text length) are skipped and
recorded in the run [Manifest][harness.Manifest]; they never abort the
suite.
"""

import copy
from dataclasses import asdict, dataclass, field, replace
import json
import logging as log
from pathlib import Path
import platform

import humanize
import json5
from jsonschema import Draft7Validator, validators
import numpy as np
import progressbar

from pmatch.util import __version__
from pmatch.util.datagen.corpus import dna_instance, encode_dna, extract_windows, read_fasta
from pmatch.util.datagen.textgen import (PlantSpec, derive_seed, gen_periodic_instance,
                                         gen_random_instance)
from pmatch.util.match import PAIRS, get_algorithm
from pmatch.util.match.core import InternalError, InvalidArgumentError
from .report import BenchRecord, emit_report, plot_distribution_comparison, plot_ratios

SCHEMA_PATH = Path(__file__).parent / 'schema' / 'bench_config.schema.json'
# Alphabet sizes of the fixed-alphabet families
PERIODIC_SIGMA = 2
DNA_SIGMA = 4


def extend_with_default(validator_class):
    validate_properties = validator_class.VALIDATORS["properties"]

    def set_defaults(validator, properties, instance, schema):
        for property, subschema in properties.items():
            if "default" in subschema and isinstance(instance, dict):
                instance.setdefault(property, subschema["default"])

        yield from validate_properties(validator, properties, instance, schema)

    return validators.extend(validator_class, {"properties": set_defaults})


DefaultValidatingDraft7Validator = extend_with_default(Draft7Validator)


def read_schema():
    with open(SCHEMA_PATH, 'r') as f:
        return json.load(f)


@dataclass(frozen=True)
class BenchConfig:
    """A validated benchmark configuration.

    See `schema/bench_config.schema.json` for the meaning and default of
    every field. Relative `fasta` paths are resolved against the directory
    of the configuration file.
    """

    matching: str
    sigmas: tuple
    lengths: tuple
    name: str = 'bench'
    family: str = 'random'
    n: int = 1_000_000
    scale: float = 1.0
    plants: dict = field(default_factory=dict)
    repeats: int = 10
    warmup: int = 1
    seed: int = 0
    fasta: str = None
    fasta_pattern_mode: str = 'substring'
    outputs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.repeats < 1:
            raise InvalidArgumentError(f'Repeats must be at least 1, got {self.repeats}')
        if not self.sigmas or not self.lengths:
            raise InvalidArgumentError('Empty parameter grid')
        if min(self.sigmas) < 1 or min(self.lengths) < 1:
            raise InvalidArgumentError('Grid values must be positive')
        if self.n < max(self.lengths):
            raise InvalidArgumentError(
                f'Text length {self.n} is shorter than the longest pattern {max(self.lengths)}')
        if not 0 < self.scale <= 1:
            raise InvalidArgumentError(f'Scale must be in (0, 1], got {self.scale}')
        if self.family == 'dna' and not self.fasta:
            raise InvalidArgumentError('The dna family requires a FASTA file')

    @classmethod
    def from_dict(cls, cfg, base_dir=None):
        """Validate a configuration dictionary, filling in the schema defaults."""
        cfg = copy.deepcopy(cfg)
        DefaultValidatingDraft7Validator(read_schema()).validate(cfg)
        if cfg.get('fasta') and base_dir is not None:
            cfg['fasta'] = str(Path(base_dir) / cfg['fasta'])
        cfg['sigmas'] = tuple(cfg['sigmas'])
        cfg['lengths'] = tuple(cfg['lengths'])
        return cls(**cfg)

    @classmethod
    def load(cls, path):
        """Load a JSON5 configuration file."""
        with open(path, 'r') as f:
            cfg = json5.load(f)
        return cls.from_dict(cfg, base_dir=Path(path).parent)

    @property
    def effective_n(self):
        """Text length after scaling, never below the longest pattern."""
        return max(int(round(self.n * self.scale)), max(self.lengths))

    @property
    def algorithms(self):
        """Names of the (naive, automaton) algorithm pair."""
        return PAIRS[self.matching]

    @property
    def distributions(self):
        if self.family == 'periodic':
            return ('periodic',)
        return tuple(self.plants['distributions'])

    @property
    def grid_sigmas(self):
        if self.family == 'periodic':
            return (PERIODIC_SIGMA,)
        if self.family == 'dna':
            return (DNA_SIGMA,)
        return tuple(self.sigmas)

    def cells(self):
        """The `(σ, m, distribution)` cells, in measurement order."""
        return [(sigma, m, distribution)
                for distribution in self.distributions
                for sigma in self.grid_sigmas
                for m in self.lengths]

    def plant_spec(self, distribution):
        return PlantSpec(count=self.plants['count'], distribution=distribution,
                         fraction=self.plants['fraction'], region=self.plants['region'])

    def to_dict(self):
        cfg = asdict(self)
        cfg['sigmas'] = list(self.sigmas)
        cfg['lengths'] = list(self.lengths)
        return cfg


def load_config(path, scale=None):
    """Load a configuration file, optionally overriding its `scale`."""
    config = BenchConfig.load(path)
    if scale is not None:
        config = replace(config, scale=scale)
    return config


@dataclass
class TrialStats:
    """Timing samples and deterministic costs of repeated runs on one input.

    Attributes:
        samples: Elapsed times of the timed runs, in nanoseconds.
        symbol_comparisons: Symbol comparisons of a single run.
        aux_lookups: Window lookups of a single run.
        occurrences: Occurrences reported by every run.
    """

    samples: list = field(default_factory=list)
    symbol_comparisons: int = 0
    aux_lookups: int = 0
    occurrences: tuple = ()

    @property
    def mean(self):
        return float(np.mean(self.samples))

    @property
    def median(self):
        return float(np.median(self.samples))

    @property
    def min(self):
        return float(np.min(self.samples))

    def to_dict(self):
        return {'mean_ns': self.mean, 'median_ns': self.median, 'min_ns': self.min,
                'samples': len(self.samples), 'symbol_comparisons': self.symbol_comparisons,
                'aux_lookups': self.aux_lookups}


def run_trial(algorithm, text, pattern, repeats=10, warmup=1):
    """Time repeated runs of an algorithm on one input.

    Args:
        algorithm: An algorithm name (see `pmatch.util.match.ALGORITHMS`)
            or a search function.
        text: The [Text][core.Text] to search.
        pattern: The [Pattern][core.Pattern] to search for.
        repeats: Number of timed runs.
        warmup: Number of untimed runs preceding the timed ones.

    Returns:
        A [TrialStats][harness.TrialStats] with one sample per timed run.
    """
    if repeats < 1:
        raise InvalidArgumentError(f'Repeats must be at least 1, got {repeats}')
    search = get_algorithm(algorithm) if isinstance(algorithm, str) else algorithm
    for _ in range(warmup):
        search(text, pattern)
    trial = None
    for _ in range(repeats):
        outcome = search(text, pattern)
        stats = outcome.stats
        if trial is None:
            trial = TrialStats([], stats.symbol_comparisons, stats.aux_lookups,
                               outcome.occurrences)
        elif (outcome.occurrences != trial.occurrences
              or stats.symbol_comparisons != trial.symbol_comparisons):
            raise InternalError(f'Non-deterministic results across repeats of {algorithm}')
        trial.samples.append(stats.elapsed)
    return trial


class Manifest:
    """Machine-readable account of a suite run.

    Holds the resolved configuration, the seeds of every measured cell and
    the reason every skipped cell was skipped. It carries no wall-clock
    timestamps and no timings, so re-runs produce identical manifests.
    """

    def __init__(self, config):
        self.config = config
        self.cells = []
        self.skipped = []

    def add_cell(self, sigma, m, distribution, seeds, naive, auto):
        self.cells.append({'sigma': sigma, 'm': m, 'distribution': distribution,
                           'seeds': list(seeds),
                           'naive_comparisons': [t.symbol_comparisons for t in naive],
                           'auto_comparisons': [t.symbol_comparisons for t in auto]})

    def skip(self, sigma, m, distribution, reason):
        log.warning(f'Skipping cell sigma={sigma} m={m} {distribution}: {reason}')
        self.skipped.append({'sigma': sigma, 'm': m, 'distribution': distribution,
                             'reason': reason})

    def to_dict(self):
        return {'version': __version__,
                'platform': {'python': platform.python_version(),
                             'implementation': platform.python_implementation(),
                             'machine': platform.machine(),
                             'numpy': np.__version__},
                'config': self.config.to_dict(),
                'algorithms': list(self.config.algorithms),
                'n': self.config.effective_n,
                'cells': self.cells,
                'skipped': self.skipped}

    def write(self, path):
        with open(path, 'w') as f:
            json.dump(self.to_dict(), f, indent=4)
            f.write('\n')


def _aggregate(sigma, m, distribution, naive, auto):
    naive_samples = [s for t in naive for s in t.samples]
    auto_samples = [s for t in auto for s in t.samples]
    return BenchRecord(
        sigma=sigma, m=m,
        naive_mean_ns=float(np.mean(naive_samples)),
        auto_mean_ns=float(np.mean(auto_samples)),
        naive_comparisons=float(np.mean([t.symbol_comparisons for t in naive])),
        auto_comparisons=float(np.mean([t.symbol_comparisons for t in auto])),
        distribution=distribution,
        naive_median_ns=float(np.median(naive_samples)),
        naive_min_ns=float(np.min(naive_samples)),
        auto_median_ns=float(np.median(auto_samples)),
        auto_min_ns=float(np.min(auto_samples)))


def _load_dna_windows(config):
    path = Path(config.fasta)
    log.info(f'Reading {path} ({humanize.naturalsize(path.stat().st_size, binary=True)})')
    n = config.effective_n
    windows = []
    for record in read_fasta(path):
        if len(windows) >= config.repeats:
            break
        windows += extract_windows(encode_dna(record), n, config.repeats - len(windows))
    if not windows:
        raise InvalidArgumentError(f'No clean window of {humanize.intcomma(n)} bases in {path}')
    if len(windows) < config.repeats:
        log.warning(f'Only {len(windows)} windows of {humanize.intcomma(n)} bases in {path}, '
                    f'reusing them across the {config.repeats} repeats')
    return windows


def _instances(config, sigma, m, distribution, dist_idx, windows):
    """Yield `(seed, instance)` for every repeat of a cell."""
    n = config.effective_n
    if config.family == 'periodic':
        yield None, gen_periodic_instance(n, m)
        return
    spec = config.plant_spec(distribution)
    for r in range(config.repeats):
        seed = derive_seed(config.seed, sigma, m, dist_idx, r)
        if config.family == 'random':
            yield seed, gen_random_instance(n, sigma, m, spec, seed)
        else:
            window = windows[r % len(windows)]
            yield seed, dna_instance(window, m, spec, seed, config.fasta_pattern_mode)


def _run_cell(config, sigma, m, distribution, dist_idx, windows):
    naive_name, auto_name = config.algorithms
    # The periodic input is deterministic: time it `repeats` times instead
    repeats = config.repeats if config.family == 'periodic' else 1
    seeds, naive, auto = [], [], []
    for seed, instance in _instances(config, sigma, m, distribution, dist_idx, windows):
        naive_trial = run_trial(naive_name, instance.text, instance.pattern, repeats,
                                config.warmup)
        auto_trial = run_trial(auto_name, instance.text, instance.pattern, repeats,
                               config.warmup)
        if naive_trial.occurrences != auto_trial.occurrences:
            raise InternalError(
                f'{naive_name} and {auto_name} disagree on seed {seed}: '
                f'{len(naive_trial.occurrences)} vs {len(auto_trial.occurrences)} occurrences')
        if seed is not None:
            seeds.append(seed)
        naive.append(naive_trial)
        auto.append(auto_trial)
    return seeds, naive, auto


def run_suite(config, manifest=None, progress=False):
    """Measure every cell of a configuration.

    Args:
        config: A [BenchConfig][harness.BenchConfig].
        manifest: An optional [Manifest][harness.Manifest] collecting the
            seeds and skipped cells.
        progress: Display a progress bar over the cells.

    Returns:
        A list of [BenchRecord][report.BenchRecord], one per measured cell.
    """
    if manifest is None:
        manifest = Manifest(config)
    windows = _load_dna_windows(config) if config.family == 'dna' else None
    cells = config.cells()
    log.info(f'Running {len(cells)} cells of {config.name} on texts of '
             f'{humanize.intcomma(config.effective_n)} symbols')
    records = []
    bar = progressbar.ProgressBar(max_value=len(cells)) if progress else None
    for k, (sigma, m, distribution) in enumerate(cells):
        dist_idx = config.distributions.index(distribution)
        try:
            seeds, naive, auto = _run_cell(config, sigma, m, distribution, dist_idx, windows)
        except InvalidArgumentError as e:
            manifest.skip(sigma, m, distribution, str(e))
        except InternalError as e:
            log.error(str(e))
            manifest.skip(sigma, m, distribution, f'divergence: {e}')
        else:
            record = _aggregate(sigma, m, distribution, naive, auto)
            log.info(f'sigma={sigma} m={m} {distribution}: q={record.ratio:.4f}')
            manifest.add_cell(sigma, m, distribution, seeds, naive, auto)
            records.append(record)
        if bar is not None:
            bar.update(k + 1)
    if bar is not None:
        bar.finish()
    return records


def write_outputs(records, manifest, output_dir):
    """Write the reports and manifest named by the configuration's `outputs`.

    Returns:
        The list of written paths.
    """
    outputs = manifest.config.outputs
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    if records:
        for key, fmt in (('csv', 'csv'), ('markdown', 'markdown')):
            path = output_dir / outputs[key]
            path.write_bytes(emit_report(records, fmt))
            written.append(path)
        if outputs.get('plot'):
            path = output_dir / outputs['plot']
            plot_ratios(records, path)
            written.append(path)
        distributions = {r.distribution for r in records}
        if outputs.get('distribution_plot') and {'uniform', 'skewed'} <= distributions:
            path = output_dir / outputs['distribution_plot']
            plot_distribution_comparison(records, path)
            written.append(path)
        elif outputs.get('distribution_plot'):
            log.info('Skipping the distribution plot: uniform and skewed records are both needed')
    path = output_dir / outputs['manifest']
    manifest.write(path)
    written.append(path)
    return written
