# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0

import json
from pathlib import Path

from jsonschema import ValidationError
import pytest

from pmatch.util.bench.harness import (BenchConfig, Manifest, load_config, run_suite, run_trial,
                                       write_outputs)
from pmatch.util.bench.report import read_records
from pmatch.util.datagen.textgen import PlantSpec, gen_random_instance
from pmatch.util.match import kmp_search
from pmatch.util.match.core import InvalidArgumentError

TEST_DATA_DIR = Path(__file__).resolve().parent / 'test_data'
CONFIG_JSON = TEST_DATA_DIR / 'config.json'
CONFIGS_DIR = Path(__file__).resolve().parent.parent / 'configs'
SAMPLE_FASTA = (Path(__file__).resolve().parent.parent.parent / 'datagen' / 'tests'
                / 'test_data' / 'sample.fa')


def config(**kwargs):
    cfg = {'matching': 'exact', 'sigmas': [2, 4], 'lengths': [8, 16], 'n': 2000,
           'plants': {'count': 10}, 'repeats': 2, 'warmup': 0}
    cfg.update(kwargs)
    return BenchConfig.from_dict(cfg)


@pytest.fixture
def instance():
    return gen_random_instance(3000, 4, 16, PlantSpec(count=10), seed=1)


def test_run_trial_samples(instance):
    trial = run_trial('exact-kmp', instance.text, instance.pattern, repeats=10, warmup=1)
    assert len(trial.samples) == 10
    assert set(instance.planted) <= set(trial.occurrences)
    assert trial.min <= trial.median <= max(trial.samples)
    assert trial.to_dict()['samples'] == 10


def test_run_trial_single_sample(instance):
    trial = run_trial(kmp_search, instance.text, instance.pattern, repeats=1, warmup=0)
    assert trial.samples == [trial.samples[0]]
    assert trial.mean == trial.samples[0]


@pytest.mark.parametrize("algorithm", ['exact-naive', 'pm-auto'])
def test_run_trial_deterministic_counts(instance, algorithm):
    first = run_trial(algorithm, instance.text, instance.pattern, repeats=2, warmup=0)
    second = run_trial(algorithm, instance.text, instance.pattern, repeats=2, warmup=0)
    assert first.symbol_comparisons == second.symbol_comparisons
    assert first.occurrences == second.occurrences


def test_run_trial_invalid(instance):
    with pytest.raises(InvalidArgumentError):
        run_trial('exact-kmp', instance.text, instance.pattern, repeats=0)
    with pytest.raises(InvalidArgumentError):
        run_trial('boyer-moore', instance.text, instance.pattern)


def test_load_config_defaults():
    cfg = load_config(CONFIG_JSON)
    assert cfg.matching == 'param'
    assert cfg.family == 'random'
    assert cfg.repeats == 10
    assert cfg.warmup == 1
    assert cfg.scale == 1.0
    assert cfg.plants == {'count': 100, 'distributions': ['uniform'], 'fraction': 0.5,
                          'region': 0.25}
    assert cfg.outputs['csv'] == 'records.csv'
    assert cfg.outputs['plot'] is None
    assert cfg.outputs['distribution_plot'] is None
    assert cfg.algorithms == ('pm-naive', 'pm-auto')
    assert load_config(CONFIG_JSON, scale=0.5).effective_n == 1000


@pytest.mark.parametrize("name, cells", [
    ('full_grid_exact.json', 120),
    ('full_grid_param.json', 120),
    ('desk_exact.json', 20),
    ('desk_param.json', 20),
    ('periodic.json', 6),
])
def test_checked_in_configs(name, cells):
    cfg = load_config(CONFIGS_DIR / name)
    assert len(cfg.cells()) == cells


def test_dna_config_resolves_fasta():
    cfg = load_config(CONFIGS_DIR / 'dna.json')
    assert Path(cfg.fasta) == CONFIGS_DIR / 'genome.fa'
    assert {sigma for sigma, _, _ in cfg.cells()} == {4}


@pytest.mark.parametrize("kwargs, error", [
    ({'matching': 'fuzzy'}, ValidationError),
    ({'repeats': 0}, ValidationError),
    ({'lengths': []}, ValidationError),
    ({'unknown': 1}, ValidationError),
    ({'n': 10, 'lengths': [32]}, InvalidArgumentError),
    ({'family': 'dna'}, InvalidArgumentError),
])
def test_invalid_config(kwargs, error):
    with pytest.raises(error):
        config(**kwargs)


def test_run_suite_grid():
    cfg = config(plants={'count': 10, 'distributions': ['uniform', 'skewed']})
    records = run_suite(cfg)
    assert len(records) == 8
    assert [(r.sigma, r.m, r.distribution) for r in records] == cfg.cells()
    for r in records:
        assert r.naive_mean_ns > 0 and r.auto_mean_ns > 0
        assert r.ratio == r.naive_mean_ns / r.auto_mean_ns
        assert r.naive_min_ns <= r.naive_median_ns


def test_run_suite_single_cell():
    assert len(run_suite(config(sigmas=[3], lengths=[5]))) == 1


def test_run_suite_counts_reproducible():
    cfg = config(matching='param')
    first, second = run_suite(cfg), run_suite(cfg)
    assert [(r.naive_comparisons, r.auto_comparisons) for r in first] == \
        [(r.naive_comparisons, r.auto_comparisons) for r in second]


def test_run_suite_skips_infeasible_cells():
    # 5 plants of length 32 do not fit in 100 symbols
    cfg = config(n=100, lengths=[4, 32], plants={'count': 5})
    manifest = Manifest(cfg)
    records = run_suite(cfg, manifest)
    assert [(r.sigma, r.m) for r in records] == [(2, 4), (4, 4)]
    assert [(c['sigma'], c['m']) for c in manifest.skipped] == [(2, 32), (4, 32)]


def test_run_suite_periodic():
    cfg = config(family='periodic', lengths=[8, 64], n=4000, repeats=3)
    records = run_suite(cfg)
    assert [(r.sigma, r.m, r.distribution) for r in records] == \
        [(2, 8, 'periodic'), (2, 64, 'periodic')]
    assert records[0].naive_comparisons == (4000 - 8 + 1) * 8
    assert records[1].count_ratio > 4 * records[0].count_ratio


def test_run_suite_dna():
    cfg = config(family='dna', fasta=str(SAMPLE_FASTA), matching='param', lengths=[3], n=10,
                 plants={'count': 2})
    records = run_suite(cfg)
    assert len(records) == 1
    assert records[0].sigma == 4


def test_distribution_insensitive_count_ratios():
    cfg = config(matching='param', sigmas=[2, 8], lengths=[16, 64], n=20_000,
                 plants={'count': 20, 'distributions': ['uniform', 'skewed']})
    records = {(r.sigma, r.m, r.distribution): r for r in run_suite(cfg)}
    for sigma in (2, 8):
        for m in (16, 64):
            uniform = records[sigma, m, 'uniform'].count_ratio
            skewed = records[sigma, m, 'skewed'].count_ratio
            assert abs(uniform - skewed) / uniform < 0.25


def test_write_outputs(tmp_path):
    cfg = config(outputs={'plot': 'ratios.png'})
    manifest = Manifest(cfg)
    records = run_suite(cfg, manifest)
    written = write_outputs(records, manifest, tmp_path / 'out')
    assert {p.name for p in written} == {'records.csv', 'records.md', 'ratios.png',
                                         'manifest.json'}
    assert len(read_records(tmp_path / 'out' / 'records.csv')) == 4
    data = json.loads((tmp_path / 'out' / 'manifest.json').read_text())
    assert data['config']['sigmas'] == [2, 4]
    assert len(data['cells']) == 4
    assert all(len(c['seeds']) == 2 for c in data['cells'])


def test_manifest_reproducible():
    cfg = config()
    dumps = []
    for _ in range(2):
        manifest = Manifest(cfg)
        run_suite(cfg, manifest)
        dumps.append(json.dumps(manifest.to_dict()))
    assert dumps[0] == dumps[1]


def test_write_outputs_distribution_plot(tmp_path):
    cfg = config(lengths=[8], plants={'count': 5, 'distributions': ['uniform', 'skewed']},
                 outputs={'distribution_plot': 'distributions.png'})
    manifest = Manifest(cfg)
    written = write_outputs(run_suite(cfg, manifest), manifest, tmp_path)
    assert tmp_path / 'distributions.png' in written
    assert (tmp_path / 'distributions.png').stat().st_size > 0


def test_write_outputs_distribution_plot_needs_both(tmp_path):
    cfg = config(lengths=[8], plants={'count': 5}, outputs={'distribution_plot': 'd.png'})
    manifest = Manifest(cfg)
    written = write_outputs(run_suite(cfg, manifest), manifest, tmp_path)
    assert {p.name for p in written} == {'records.csv', 'records.md', 'manifest.json'}
    assert not (tmp_path / 'd.png').exists()
