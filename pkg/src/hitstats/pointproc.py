"""Dynamical point processes and their distance to the Poisson law.

Two estimable faces of the total-variation distance are provided, both lower
bounds for the supremum over the full counting sigma-algebra:

* :func:`tv_counts` compares the law of the total count on ``[0, T]``;
* :func:`fidi_tv` compares the joint counts on a fixed partition of ``[0, T]``
  against a product of independent Poisson laws.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy import stats

from .errors import AllCensored, InsufficientSamples

__all__ = [
    "PointPattern",
    "CountLaw",
    "build_point_process",
    "poisson_pmf",
    "tv_counts",
    "fidi_tv",
    "fidi_tv_counts",
    "equal_partition",
    "survival_curve",
    "SurvivalRow",
    "ks_exponential",
]

MIN_FIDI_SAMPLES = 1000
MAX_CELLS = 4


@dataclass(frozen=True)
class PointPattern:
    horizon: float
    times: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=np.float64)
        if len(t) and (np.any(np.diff(t) < 0) or t[0] < 0 or t[-1] > self.horizon):
            raise ValueError("times must be sorted and inside [0, T]")
        object.__setattr__(self, "times", t)

    def __len__(self) -> int:
        return len(self.times)

    def counts(self, partition: Sequence[tuple[float, float]]) -> tuple[int, ...]:
        """Counts in each cell ``[a, b)``; a cell ending at ``T`` also keeps ``T``."""
        out = []
        for a, b in partition:
            lo = np.searchsorted(self.times, a, side="left")
            side = "right" if b >= self.horizon else "left"
            hi = np.searchsorted(self.times, b, side=side)
            out.append(int(hi - lo))
        return tuple(out)


@dataclass(frozen=True)
class CountLaw:
    """Law on ``{0, 1, ...}``: explicit masses for ``k < len(probabilities)`` plus a tail."""

    probabilities: np.ndarray
    tail_mass: float = 0.0

    def __post_init__(self):
        p = np.asarray(self.probabilities, dtype=np.float64)
        if np.any(p < 0) or self.tail_mass < 0:
            raise ValueError("probabilities must be nonnegative")
        if abs(p.sum() + self.tail_mass - 1.0) > 1e-12:
            raise ValueError("probabilities and tail must sum to 1")
        object.__setattr__(self, "probabilities", p)

    @classmethod
    def empirical(cls, counts) -> "CountLaw":
        c = np.asarray(counts, dtype=np.int64)
        if len(c) == 0:
            raise InsufficientSamples("empty sample")
        freq = np.bincount(c) / len(c)
        # rounding can leave the sum a few ulps away from 1
        return cls(freq / freq.sum(), 0.0)

    @classmethod
    def point_mass(cls, k: int) -> "CountLaw":
        p = np.zeros(k + 1)
        p[k] = 1.0
        return cls(p, 0.0)

    @classmethod
    def poisson(cls, lam: float, kmax: int | None = None) -> "CountLaw":
        if kmax is None:
            kmax = max(60, int(lam + 40 * math.sqrt(lam + 1)))
        p = np.array([poisson_pmf(k, lam) for k in range(kmax + 1)])
        tail = float(stats.poisson.sf(kmax, lam)) if lam > 0 else 0.0
        total = p.sum() + tail
        return cls(p / total, tail / total)

    def pmf(self, k: int) -> float:
        return float(self.probabilities[k]) if k < len(self.probabilities) else 0.0


def build_point_process(hits, mu_hat: float, horizon: float) -> PointPattern:
    """Rescale hit indices by ``mu_hat`` and keep those landing in ``[0, T]``."""
    if not mu_hat > 0:
        raise ValueError("mu_hat must be positive")
    h = np.asarray(hits, dtype=np.int64)
    last = math.floor(horizon / mu_hat)
    h = h[h <= last]
    return PointPattern(horizon, h * mu_hat)


def poisson_pmf(k: int, lam: float) -> float:
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    if lam == 0:
        return 1.0 if k == 0 else 0.0
    if k <= 20:
        return math.exp(-lam) * lam**k / math.factorial(k)
    return math.exp(k * math.log(lam) - lam - math.lgamma(k + 1))


def tv_counts(lhs: CountLaw, rhs: CountLaw) -> float:
    n = max(len(lhs.probabilities), len(rhs.probabilities))
    a = np.zeros(n)
    b = np.zeros(n)
    a[: len(lhs.probabilities)] = lhs.probabilities
    b[: len(rhs.probabilities)] = rhs.probabilities
    return float(0.5 * np.abs(a - b).sum() + 0.5 * abs(lhs.tail_mass - rhs.tail_mass))


def equal_partition(horizon: float, m: int) -> list[tuple[float, float]]:
    edges = np.linspace(0.0, horizon, m + 1)
    return [(float(edges[i]), float(edges[i + 1])) for i in range(m)]


def fidi_tv(patterns: Sequence[PointPattern], partition, min_samples: int = MIN_FIDI_SAMPLES) -> tuple[float, float]:
    """TV between the empirical joint cell counts and independent Poissons.

    The empirical law lives on the finitely many observed outcomes, so the
    distance is evaluated exactly: observed outcomes contribute
    ``|emp - P|`` and every unobserved outcome contributes its Poisson mass,
    which sums to ``1 - P(observed)``. Returns ``(tv, standard_error)``; the
    error is the plug-in delta-method value.
    """
    partition = _check_partition(partition)
    if len(patterns) < min_samples:
        raise InsufficientSamples(f"need >= {min_samples} patterns, got {len(patterns)}")
    return fidi_tv_counts([p.counts(partition) for p in patterns], partition, min_samples)


def _check_partition(partition) -> list[tuple[float, float]]:
    partition = [(float(a), float(b)) for a, b in partition]
    if not 1 <= len(partition) <= MAX_CELLS:
        raise ValueError(f"partition must have 1..{MAX_CELLS} cells")
    for (a, b), (c, _) in zip(partition, partition[1:]):
        if c < b:
            raise ValueError("partition cells overlap or are unsorted")
    return partition


def fidi_tv_counts(cell_counts, partition, min_samples: int = MIN_FIDI_SAMPLES) -> tuple[float, float]:
    """:func:`fidi_tv` on precomputed per-cell counts, one row per realization."""
    partition = _check_partition(partition)
    rows = [tuple(int(v) for v in c) for c in cell_counts]
    if len(rows) < min_samples:
        raise InsufficientSamples(f"need >= {min_samples} patterns, got {len(rows)}")
    if any(len(c) != len(partition) for c in rows):
        raise ValueError("count rows do not match the partition")
    lams = [b - a for a, b in partition]
    n = len(rows)
    observed = Counter(rows)

    diff_sum = 0.0
    poisson_seen = 0.0
    signed = []  # (sign, empirical mass) for the variance
    for outcome in sorted(observed):
        emp = observed[outcome] / n
        ref = math.prod(poisson_pmf(k, lam) for k, lam in zip(outcome, lams))
        diff_sum += abs(emp - ref)
        poisson_seen += ref
        signed.append((1.0 if emp >= ref else -1.0, emp))
    tv = 0.5 * (diff_sum + max(0.0, 1.0 - poisson_seen))

    s = np.array([x[0] for x in signed])
    e = np.array([x[1] for x in signed])
    var = 0.25 * (np.sum(s * s * e) - np.sum(s * e) ** 2) / n
    return float(min(tv, 1.0)), float(math.sqrt(max(var, 0.0)))


class SurvivalRow(NamedTuple):
    t: float
    survival: float
    reference: float
    difference: float
    censored: bool


def survival_curve(first_hits, t_grid) -> list[SurvivalRow]:
    """Empirical ``P(tau * mu > t)`` against ``e^{-t}``.

    Censored trials (``+inf``) count as surviving every grid time; rows are
    flagged when any censored trial is present.
    """
    fh = np.sort(np.asarray(first_hits, dtype=np.float64))
    n = len(fh)
    if n == 0:
        raise InsufficientSamples("no trials")
    censored = bool(np.isinf(fh).any())
    rows = []
    for t in t_grid:
        surv = 1.0 - np.searchsorted(fh, t, side="right") / n
        ref = math.exp(-t)
        rows.append(SurvivalRow(float(t), float(surv), ref, float(surv - ref), censored))
    return rows


def ks_exponential(first_hits) -> float:
    """Kolmogorov-Smirnov distance between finite first hits and ``Exp(1)``.

    Censored (infinite) entries are dropped.
    """
    fh = np.asarray(first_hits, dtype=np.float64)
    finite = fh[np.isfinite(fh)]
    if len(finite) == 0:
        raise AllCensored("every trial is censored")
    return float(stats.kstest(finite, "expon").statistic)
