# Copyright 2026 The pmatch Authors.
# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Benchmark records and their reports.

A [BenchRecord][report.BenchRecord] is one row of a results table: the
mean running times and mean comparison counts of the naive algorithm and
of the automaton on one `(σ, m, distribution)` cell, and their ratio `q`.
Records are emitted as CSV (machine-readable, see `CSV_COLUMNS`) or as
markdown tables grouped by alphabet size, one table per distribution.
"""

from dataclasses import dataclass
import io
from math import isfinite, nan
from pathlib import Path

import matplotlib
import numpy as np
import pandas as pd
from prettytable import PrettyTable
from tabulate import tabulate
from termcolor import cprint

from pmatch.util.match.core import FormatError, InvalidArgumentError

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402

CSV_COLUMNS = ['sigma', 'm', 'naive_mean_ns', 'auto_mean_ns', 'ratio',
               'naive_comparisons', 'auto_comparisons', 'distribution']
FORMATS = ('csv', 'markdown')


def _ratio(num, den):
    return num / den if den else nan


@dataclass(frozen=True)
class BenchRecord:
    """Aggregated measurements of one benchmark cell.

    Attributes:
        sigma: Alphabet size.
        m: Pattern length.
        naive_mean_ns: Mean elapsed time of the naive algorithm.
        auto_mean_ns: Mean elapsed time of the automaton.
        naive_comparisons: Mean symbol comparisons of the naive algorithm.
        auto_comparisons: Mean symbol comparisons of the automaton.
        distribution: Placement of the planted occurrences (`uniform`,
            `skewed`), or the input family (`periodic`).
        naive_median_ns: Median elapsed time of the naive algorithm, if
            measured.
        naive_min_ns: Minimum elapsed time of the naive algorithm, if
            measured.
        auto_median_ns: Median elapsed time of the automaton, if measured.
        auto_min_ns: Minimum elapsed time of the automaton, if measured.
    """

    sigma: int
    m: int
    naive_mean_ns: float
    auto_mean_ns: float
    naive_comparisons: float
    auto_comparisons: float
    distribution: str = 'uniform'
    naive_median_ns: float = None
    naive_min_ns: float = None
    auto_median_ns: float = None
    auto_min_ns: float = None

    @property
    def ratio(self):
        """Time ratio `q` = naive mean / automaton mean; `q < 1` favours naive."""
        return _ratio(self.naive_mean_ns, self.auto_mean_ns)

    @property
    def count_ratio(self):
        return _ratio(self.naive_comparisons, self.auto_comparisons)

    @property
    def m_over_q(self):
        return _ratio(self.m, self.ratio)

    def row(self):
        """The record as a CSV row, keyed by `CSV_COLUMNS`."""
        return {'sigma': self.sigma, 'm': self.m,
                'naive_mean_ns': self.naive_mean_ns, 'auto_mean_ns': self.auto_mean_ns,
                'ratio': f'{self.ratio:.4f}',
                'naive_comparisons': self.naive_comparisons,
                'auto_comparisons': self.auto_comparisons,
                'distribution': self.distribution}


def _distributions(records):
    return list(dict.fromkeys(r.distribution for r in records))


def _markdown(records):
    headers = ['σ', 'm', 'naive [ns]', 'automaton [ns]', 'naive/automaton',
               'naive comparisons', 'automaton comparisons']
    sections = []
    for distribution in _distributions(records):
        selected = sorted((r for r in records if r.distribution == distribution),
                          key=lambda r: (r.sigma, r.m))
        rows = []
        previous_sigma = None
        for r in selected:
            # Print σ only on the first row of its group
            sigma = r.sigma if r.sigma != previous_sigma else ''
            previous_sigma = r.sigma
            rows.append([sigma, r.m, f'{r.naive_mean_ns:.1f}', f'{r.auto_mean_ns:.1f}',
                         f'{r.ratio:.4f}', f'{r.naive_comparisons:.1f}',
                         f'{r.auto_comparisons:.1f}'])
        table = tabulate(rows, headers=headers, tablefmt='pipe', disable_numparse=True)
        sections.append(f'### {distribution}\n\n{table}\n')
    return '\n'.join(sections)


def emit_report(records, fmt='csv'):
    """Render records as a report.

    Args:
        records: A non-empty sequence of [BenchRecord][report.BenchRecord].
        fmt: `csv` or `markdown`.

    Returns:
        The report as UTF-8 bytes.
    """
    records = list(records)
    if not records:
        raise InvalidArgumentError('Cannot emit a report of zero records')
    if fmt == 'csv':
        df = pd.DataFrame([r.row() for r in records], columns=CSV_COLUMNS)
        buf = io.StringIO()
        df.to_csv(buf, index=False)
        return buf.getvalue().encode('utf-8')
    elif fmt == 'markdown':
        return _markdown(records).encode('utf-8')
    raise InvalidArgumentError(f'Unknown report format {fmt}, choose among {FORMATS}')


def read_records(path):
    """Parse a CSV report produced by [emit_report()][report.emit_report].

    The `ratio` column is not read back: it is recomputed from the means.
    """
    try:
        df = pd.read_csv(path, dtype={'distribution': str})
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise FormatError(f'Unreadable records file {path}: {e}')
    if list(df.columns) != CSV_COLUMNS:
        raise FormatError(f'Records file {path} has columns {list(df.columns)}, '
                          f'expected {CSV_COLUMNS}')
    return [BenchRecord(sigma=int(row.sigma), m=int(row.m),
                        naive_mean_ns=float(row.naive_mean_ns),
                        auto_mean_ns=float(row.auto_mean_ns),
                        naive_comparisons=float(row.naive_comparisons),
                        auto_comparisons=float(row.auto_comparisons),
                        distribution=row.distribution)
            for row in df.itertuples(index=False)]


def print_summary(records, skipped=()):
    """Print a table of the records and the share of cells favouring naive.

    Args:
        records: A sequence of [BenchRecord][report.BenchRecord].
        skipped: Descriptions of the cells that were not measured.
    """
    periodic = any(r.distribution == 'periodic' for r in records)
    table = PrettyTable()
    table.title = 'Benchmark summary'
    table.field_names = ['σ', 'm', 'distribution', 'naive [ns]', 'automaton [ns]', 'q',
                         'count ratio'] + (['m/q'] if periodic else [])
    for r in records:
        row = [r.sigma, r.m, r.distribution, f'{r.naive_mean_ns:.0f}', f'{r.auto_mean_ns:.0f}',
               f'{r.ratio:.4f}', f'{r.count_ratio:.4f}']
        if periodic:
            row.append(f'{r.m_over_q:.2f}')
        table.add_row(row)
    print(table)
    if records:
        favour_naive = sum(1 for r in records if r.ratio < 1)
        cprint(f'{favour_naive}/{len(records)} cells with q < 1 '
               f'({100 * favour_naive / len(records):.1f}%)', 'green', attrs=['bold'])
    for cell in skipped:
        cprint(f'Skipped {cell}', 'yellow', attrs=['bold'])


def plot_ratios(records, path):
    """Plot the ratio `q` against the pattern length, one line per σ.

    One panel is drawn per distribution.
    """
    distributions = _distributions(records)
    if not distributions:
        raise InvalidArgumentError('Cannot plot zero records')
    fig, axes = plt.subplots(1, len(distributions), figsize=(6 * len(distributions), 4),
                             squeeze=False, sharey=True)
    for ax, distribution in zip(axes[0], distributions):
        selected = [r for r in records if r.distribution == distribution]
        for sigma in sorted({r.sigma for r in selected}):
            points = sorted((r.m, r.ratio) for r in selected if r.sigma == sigma)
            ms, ratios = zip(*points)
            ax.plot(ms, ratios, marker='o', label=f'σ = {sigma}')
        ax.axhline(1, color='grey', linestyle='--', linewidth=1)
        ax.set_xscale('log', base=2)
        ax.set_xlabel('pattern length m')
        ax.set_title(distribution)
        ax.grid(True)
        ax.legend(fontsize='small')
    axes[0][0].set_ylabel('naive / automaton')
    fig.tight_layout()
    fig.savefig(Path(path))
    plt.close(fig)


def plot_distribution_comparison(records, path):
    """Plot the mean ratio per σ of uniform vs skewed placement side by side."""
    sigmas = sorted({r.sigma for r in records})
    distributions = [d for d in ('uniform', 'skewed') if any(r.distribution == d for r in records)]
    if not sigmas or not distributions:
        raise InvalidArgumentError('No uniform or skewed records to compare')
    x = np.arange(len(sigmas))
    width = 0.8 / len(distributions)
    fig, ax = plt.subplots(figsize=(8, 4))
    for k, distribution in enumerate(distributions):
        means = []
        for sigma in sigmas:
            ratios = [r.ratio for r in records
                      if r.sigma == sigma and r.distribution == distribution and isfinite(r.ratio)]
            means.append(np.mean(ratios) if ratios else nan)
        ax.bar(x + k * width, means, width, label=distribution)
    ax.set_xticks(x + width * (len(distributions) - 1) / 2)
    ax.set_xticklabels([str(s) for s in sigmas])
    ax.set_xlabel('alphabet size σ')
    ax.set_ylabel('mean naive / automaton')
    ax.legend()
    ax.grid(True, axis='y')
    fig.tight_layout()
    fig.savefig(Path(path))
    plt.close(fig)
