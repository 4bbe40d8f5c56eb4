"""Orbit-based estimators: ball measure, local dimension, coronas, short returns.

All estimators work on a *distance profile*: the array ``d_i = d(x_i, z)`` of
distances from each orbit state to the ball center. One profile serves every
radius, corona width and return window for that center, and keeps the counts
mutually consistent (``mu(B_{r+delta}) - mu(B_{r-delta})`` equals the corona
count exactly, for instance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .errors import DegenerateTarget, InsufficientGrid

__all__ = [
    "Metric",
    "CIRCLE",
    "BallTarget",
    "MeasureEstimate",
    "DistanceProfile",
    "hit_indices",
    "estimate_ball_measure",
    "local_dimension",
    "corona_ratio",
    "short_return_fraction",
    "short_return_fraction_from_hits",
    "short_return_window",
    "MIN_MEASURE_SAMPLES",
]

MIN_MEASURE_SAMPLES = 10_000
Z95 = 1.96


@dataclass(frozen=True)
class Metric:
    """Distance on one of the phase spaces.

    ``circle``: interval with endpoints identified. ``solenoid``: max of the
    circle distance in ``x`` and the Euclidean distance in the disk.
    ``euclidean``: plain Euclidean. ``billiard``: Euclidean in ``(s, phi)``
    with ``s`` on a circle of circumference ``period``.
    """

    kind: str = "circle"
    period: float = 1.0

    def __call__(self, points, center) -> np.ndarray:
        pts = np.asarray(points, dtype=np.float64)
        if pts.ndim == 1:
            pts = pts[:, None]
        c = np.atleast_1d(np.asarray(center, dtype=np.float64))
        if self.kind == "circle":
            return _circle(pts[:, 0] - c[0], self.period)
        if self.kind == "solenoid":
            dx = _circle(pts[:, 0] - c[0], 1.0)
            dz = np.hypot(pts[:, 1] - c[1], pts[:, 2] - c[2])
            return np.maximum(dx, dz)
        if self.kind == "billiard":
            ds = _circle(pts[:, 0] - c[0], self.period)
            return np.hypot(ds, pts[:, 1] - c[1])
        if self.kind == "euclidean":
            return np.sqrt(((pts - c) ** 2).sum(axis=1))
        raise ValueError(f"unknown metric {self.kind!r}")


def _circle(diff: np.ndarray, period: float) -> np.ndarray:
    d = np.abs(diff) % period
    return np.minimum(d, period - d)


CIRCLE = Metric("circle")


@dataclass(frozen=True)
class BallTarget:
    center: tuple
    radius: float
    metric: Metric = CIRCLE

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("ball radius must be positive")
        object.__setattr__(self, "center", tuple(float(c) for c in np.atleast_1d(self.center)))


@dataclass(frozen=True)
class MeasureEstimate:
    mean: float
    half_width: float
    sample_count: int

    @classmethod
    def from_counts(cls, hits: int, n: int) -> "MeasureEstimate":
        mean = hits / n
        return cls(mean, Z95 * math.sqrt(mean * (1.0 - mean) / n), n)


@dataclass
class DistanceProfile:
    """Distances from every orbit state to a fixed center."""

    distances: np.ndarray
    _sorted: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def from_orbit(cls, orbit, center, metric: Metric = CIRCLE) -> "DistanceProfile":
        return cls(metric(orbit, center))

    def __len__(self) -> int:
        return len(self.distances)

    @property
    def sorted(self) -> np.ndarray:
        if self._sorted is None:
            self._sorted = np.sort(self.distances)
        return self._sorted

    def count_within(self, r: float) -> int:
        """Number of states with ``d < r`` (strict)."""
        return int(np.searchsorted(self.sorted, r, side="left"))

    def hits(self, r: float) -> np.ndarray:
        return np.flatnonzero(self.distances < r)

    def measure(self, r: float, min_samples: int = MIN_MEASURE_SAMPLES) -> MeasureEstimate:
        n = len(self)
        if n < min_samples:
            raise ValueError(f"need at least {min_samples} orbit states, got {n}")
        k = self.count_within(r)
        if k == 0:
            raise DegenerateTarget(f"no orbit state within r={r:g} of the center")
        return MeasureEstimate.from_counts(k, n)

    def corona_count(self, r: float, delta: float) -> int:
        if delta <= 0:
            return 0
        return self.count_within(r + delta) - self.count_within(r - delta)

    def corona_ratio(self, r: float, delta: float) -> float:
        denom = self.count_within(r)
        if denom == 0:
            raise DegenerateTarget(f"no orbit state within r={r:g} of the center")
        return self.corona_count(r, delta) / denom

    def short_return_fraction(self, r: float, p: int) -> float:
        return short_return_fraction_from_hits(self.hits(r), len(self), p)


def hit_indices(orbit, target: BallTarget) -> np.ndarray:
    """Sorted indices ``i`` with ``d(orbit[i], z) < r``."""
    if len(orbit) == 0:
        raise ValueError("orbit must be nonempty")
    return np.flatnonzero(target.metric(orbit, target.center) < target.radius)


def estimate_ball_measure(orbit, target: BallTarget) -> MeasureEstimate:
    """Birkhoff estimate of ``mu(B_r(z))`` with a 95% normal half-width."""
    prof = DistanceProfile.from_orbit(orbit, target.center, target.metric)
    return prof.measure(target.radius)


def local_dimension(targets, estimates) -> tuple[float, float]:
    """Least-squares slope of ``log mu`` against ``log r`` and its standard error.

    ``targets`` may be :class:`BallTarget` objects or bare radii; ``estimates``
    may be :class:`MeasureEstimate` objects or bare measure values.
    """
    radii = np.array([t.radius if isinstance(t, BallTarget) else float(t) for t in targets])
    mus = np.array([e.mean if isinstance(e, MeasureEstimate) else float(e) for e in estimates])
    if len(radii) != len(mus):
        raise ValueError("targets and estimates differ in length")
    if len(radii) < 4:
        raise InsufficientGrid(f"need >= 4 radii, got {len(radii)}")
    if np.any(mus <= 0):
        raise DegenerateTarget("local dimension needs nondegenerate estimates")
    fit = stats.linregress(np.log(radii), np.log(mus))
    return float(fit.slope), float(fit.stderr)


def corona_ratio(orbit, z, r: float, delta: float, metric: Metric = CIRCLE) -> float:
    """``mu(B_{r+delta}(z) minus B_{r-delta}(z)) / mu(B_r(z))`` along the orbit."""
    if delta < 0 or delta >= r:
        raise ValueError("need 0 <= delta < r")
    return DistanceProfile.from_orbit(orbit, z, metric).corona_ratio(r, delta)


def short_return_fraction_from_hits(hits, length: int, p: int) -> float:
    """Fraction of hits ``i`` (with ``i + p < length``) followed by another hit within ``p`` steps."""
    if p < 1:
        raise ValueError("p must be >= 1")
    h = np.asarray(hits, dtype=np.int64)
    if len(h) == 0:
        raise DegenerateTarget("no hits, short returns undefined")
    eligible = h + p < length
    n_eligible = int(eligible.sum())
    if n_eligible == 0:
        raise DegenerateTarget("no hit leaves room for a return window")
    gaps = np.diff(h)
    returns = np.zeros(len(h), dtype=bool)
    returns[:-1] = gaps <= p
    return float(np.count_nonzero(returns & eligible)) / n_eligible


def short_return_fraction(orbit, target: BallTarget, p: int) -> float:
    if len(orbit) <= p:
        raise ValueError("orbit must be longer than p")
    return short_return_fraction_from_hits(hit_indices(orbit, target), len(orbit), p)


def short_return_window(mu_hat: float, horizon: float, dim: float, epsilon: float) -> tuple[int, int]:
    """``(n, p)`` with ``n = floor(T/mu)`` and ``p = floor(n^((d - eps)/d))``."""
    n = int(math.floor(horizon / mu_hat))
    p = int(math.floor(n ** ((dim - epsilon) / dim))) if n > 0 else 0
    return n, max(p, 1)
