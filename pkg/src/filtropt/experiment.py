"""Empirical census and Monte Carlo measurement of filter quality.

Every trial builds one period of the filtered sequence, measures linear
complexity with periodic Berlekamp-Massey and the exact minimal period,
and counts how many filters reach the ceiling nk(L, k) and the full period
2^L - 1.  Exhaustive mode walks the whole filter space; Monte Carlo mode
draws uniformly with a per-trial generator seeded by a counter-based mix
(blake2b over master seed and trial index), so results are bit-identical
for a given (L, k, seed, trials) no matter how trials are scheduled or how
many workers run them.
"""
from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

import numpy as np

from . import polytable
from .anf import (DEFAULT_ENUMERATION_CAP, FilterFunction, count_filters,
                  enumerate_filters, format_anf, random_filter)
from .complexity import min_period_packed, periodic_lc_packed
from .cosets import nk
from .field import FieldContext
from .lfsr import window_table
from .likelihood import LikelihoodReport, pr_exact

DESK_MAX_L = 16
DEFAULT_TRIALS = 20000
_WILSON_Z = 1.959963984540054  # two-sided 95%


@dataclass
class TrialRecord:
    filter_anf: str
    lc: int
    period: int
    is_max: bool


@dataclass
class ExperimentSummary:
    """Aggregated run outcome; reproducible bit-for-bit from (L, k, seed, trials)."""

    L: int
    k: int
    mode: str
    trials: int
    hits_max_lc: int
    hits_max_period: int
    max_lc_target: int
    empirical_pr: float
    ci_low: float | None
    ci_high: float | None
    seed: int | None
    analytic_pr: float
    z_score: float
    records: list[TrialRecord] | None = field(default=None, repr=False)


@dataclass
class Verdict:
    """Comparison of a run against the analytic report.

    ok is the mode's primary criterion: census counts must match nfm
    exactly, sampling must land within 3 sigma.  bound_respected compares
    against the exponential approximation bound_general (with 3 sigma of
    sampling slack); it is reported for context, not gating, since that
    approximation can sit slightly above the true probability.
    """

    exact_match: bool | None
    within_3_sigma: bool | None
    bound_respected: bool
    ok: bool


class _SequenceLab:
    """Shared per-(ctx) machinery: windows, monomial value vectors."""

    def __init__(self, ctx: FieldContext):
        if ctx.L > DESK_MAX_L:
            raise ValueError(
                f"sequence experiments are capped at L <= {DESK_MAX_L} "
                f"(analytic reports remain available for any L)")
        self.ctx = ctx
        self.period = ctx.order
        self._windows = np.array(window_table(ctx), dtype=np.int64)
        self._vectors: dict[int, int] = {}

    def _vector(self, mask: int) -> int:
        vec = self._vectors.get(mask)
        if vec is None:
            hits = (self._windows & mask) == mask
            vec = int.from_bytes(np.packbits(hits, bitorder="little").tobytes(), "little")
            self._vectors[mask] = vec
        return vec

    def filter_period_packed(self, f: FilterFunction) -> int:
        """One period of the filter output as a packed int."""
        out = 0
        for mask in f._masks:
            out ^= self._vector(mask)
        return out

    def measure(self, f: FilterFunction) -> tuple[int, int]:
        """(linear complexity, minimal period) of the filter output."""
        z = self.filter_period_packed(f)
        return periodic_lc_packed(z, self.period), min_period_packed(z, self.period)


def trial_seed(master_seed: int, index: int) -> int:
    """Counter-based 64-bit sub-seed: blake2b over (master seed, index)."""
    payload = master_seed.to_bytes(16, "little", signed=True) + index.to_bytes(8, "little")
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "little")


def wilson_interval(hits: int, trials: int, z: float = _WILSON_Z) -> tuple[float, float]:
    """95% Wilson score interval; well behaved near probability 1."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    phat = hits / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = (z / denom) * sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials))
    return max(0.0, center - half), min(1.0, center + half)


def _census_chunk(args: tuple[int, int, int, int, bool]) -> tuple[int, int, list | None]:
    L, k, lo, hi, collect = args
    ctx = polytable.context_for(L)
    lab = _SequenceLab(ctx)
    target = nk(L, k)
    period = ctx.order
    hits_lc = 0
    hits_period = 0
    records = [] if collect else None
    for f in enumerate_filters(L, k, start=lo, stop=hi):
        lc, per = lab.measure(f)
        is_max = lc == target
        hits_lc += is_max
        hits_period += per == period
        if collect:
            records.append(TrialRecord(format_anf(f), lc, per, is_max))
    return hits_lc, hits_period, records


def _mc_chunk(args: tuple[int, int, int, int, int, bool]) -> tuple[int, int, list | None]:
    L, k, seed, lo, hi, collect = args
    ctx = polytable.context_for(L)
    lab = _SequenceLab(ctx)
    target = nk(L, k)
    period = ctx.order
    hits_lc = 0
    hits_period = 0
    records = [] if collect else None
    for i in range(lo, hi):
        rng = random.Random(trial_seed(seed, i))
        f = random_filter(L, k, rng)
        lc, per = lab.measure(f)
        is_max = lc == target
        hits_lc += is_max
        hits_period += per == period
        if collect:
            records.append(TrialRecord(format_anf(f), lc, per, is_max))
    return hits_lc, hits_period, records


def _run_chunks(worker, arg_chunks, jobs: int):
    if jobs <= 1 or len(arg_chunks) <= 1:
        results = [worker(a) for a in arg_chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, arg_chunks))
    hits_lc = sum(r[0] for r in results)
    hits_period = sum(r[1] for r in results)
    records = None
    if results and results[0][2] is not None:
        records = [rec for r in results for rec in r[2]]
    return hits_lc, hits_period, records


def _chunk_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    n = max(1, min(jobs, total))
    step = (total + n - 1) // n
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def run_exhaustive(L: int, k: int, ctx: FieldContext | None = None, *,
                   jobs: int = 1, collect_records: bool = False) -> ExperimentSummary:
    """Measure every order-k filter; the census against which nfm is judged."""
    if ctx is None:
        ctx = polytable.context_for(L)
    total = count_filters(L, k)
    if total > DEFAULT_ENUMERATION_CAP:
        raise ValueError(
            f"census of about 2^{total.bit_length() - 1} filters exceeds the cap "
            f"of {DEFAULT_ENUMERATION_CAP}; use run_monte_carlo instead")
    chunks = [(L, k, lo, hi, collect_records) for lo, hi in _chunk_ranges(total, jobs)]
    hits_lc, hits_period, records = _run_chunks(_census_chunk, chunks, jobs)
    analytic = pr_exact(L, k)
    empirical = Fraction(hits_lc, total)
    se = sqrt(float(analytic) * (1 - float(analytic)) / total)
    z = 0.0 if empirical == analytic else float(empirical - analytic) / se
    return ExperimentSummary(
        L=L, k=k, mode="exhaustive", trials=total,
        hits_max_lc=hits_lc, hits_max_period=hits_period,
        max_lc_target=nk(L, k), empirical_pr=float(empirical),
        ci_low=None, ci_high=None, seed=None,
        analytic_pr=float(analytic), z_score=z, records=records)


def run_monte_carlo(L: int, k: int, trials: int = DEFAULT_TRIALS, seed: int = 0,
                    ctx: FieldContext | None = None, *, jobs: int = 1,
                    collect_records: bool = False) -> ExperimentSummary:
    """trials uniform filter draws with reproducible per-trial sub-seeds."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if ctx is None:
        ctx = polytable.context_for(L)
    if ctx.L > DESK_MAX_L:
        raise ValueError(
            f"Monte Carlo needs sequence work, capped at L <= {DESK_MAX_L}; "
            "the analytic pr_report covers larger L")
    chunks = [(L, k, seed, lo, hi, collect_records) for lo, hi in _chunk_ranges(trials, jobs)]
    hits_lc, hits_period, records = _run_chunks(_mc_chunk, chunks, jobs)
    analytic = float(pr_exact(L, k))
    empirical = hits_lc / trials
    ci_low, ci_high = wilson_interval(hits_lc, trials)
    se = sqrt(analytic * (1 - analytic) / trials)
    z = (empirical - analytic) / se if se else 0.0
    return ExperimentSummary(
        L=L, k=k, mode="monte-carlo", trials=trials,
        hits_max_lc=hits_lc, hits_max_period=hits_period,
        max_lc_target=nk(L, k), empirical_pr=empirical,
        ci_low=ci_low, ci_high=ci_high, seed=seed,
        analytic_pr=analytic, z_score=z, records=records)


def compare(summary: ExperimentSummary, report: LikelihoodReport) -> Verdict:
    """Judge a run against the analytic report for the same (L, k)."""
    if (summary.L, summary.k) != (report.L, report.k):
        raise ValueError(
            f"summary is for (L={summary.L}, k={summary.k}) but report is for "
            f"(L={report.L}, k={report.k})")
    exact_match = None
    within = None
    if summary.mode == "exhaustive":
        if report.nfm is None:
            raise ValueError("exhaustive comparison needs an exact-mode report")
        exact_match = summary.hits_max_lc == report.nfm
        ok = exact_match
        slack = 0.0
    else:
        within = abs(summary.z_score) <= 3.0
        ok = within
        p = summary.analytic_pr
        slack = 3.0 * sqrt(p * (1 - p) / summary.trials)
    bound_respected = summary.empirical_pr > float(report.bound_general) - slack
    return Verdict(exact_match=exact_match, within_3_sigma=within,
                   bound_respected=bound_respected, ok=ok)
