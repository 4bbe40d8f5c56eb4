"""Experiment orchestration: configs, seeded parallel sweeps, persistence, fits.

A sweep over ``(z, r)`` proceeds in three stages:

1. one long orbit per system gives a distance profile per center, from which
   the ball measure, local dimension, corona mass and short returns are read;
2. ``trials`` independent orbits per cell, each seeded from
   ``(master_seed, system, z index, r index, trial index)``, give the hit
   counts on ``[0, T]``, the counts on an equal partition and the first hit;
3. the merged trial arrays are reduced to one :class:`ResultRow` per cell.

Trials are grouped in fixed-size blocks that do not depend on the worker
count, and blocks are merged in index order, so output is identical for any
number of workers.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import io
import json
import math
import sys
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from scipy import stats

from . import bounds
from .billiards import TableSpec, billiard_orbit, reversal_error
from .errors import AllCensored, DegenerateTarget, Infeasible, InsufficientGrid, InsufficientSamples, ValidationError
from .measure import DistanceProfile, Metric, local_dimension, short_return_window
from .pointproc import CountLaw, equal_partition, fidi_tv_counts, ks_exponential, tv_counts
from .systems import Kind, SystemSpec, generate_orbit

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = [
    "ExperimentConfig",
    "ResultRow",
    "FitResult",
    "COLUMNS",
    "child_seed",
    "system_from_dict",
    "orbit_for",
    "metric_for",
    "analytic_rate_inputs",
    "run_experiment",
    "write_results",
    "read_results",
    "fit_rate",
    "selftest",
    "SELFTEST_SUITES",
]

MAX_HORIZON = 5.0
MIN_TRIALS = 100
TRIAL_BLOCK = 250
ORBIT_KEY = 0xFFFF_FFFF
CENTER_KEY = 0xFFFF_FFFE
DIM_OFFSETS = np.arange(-2, 4) / 2.0  # local slope over r * 2^(j/2)


# -- systems -------------------------------------------------------------------


def system_from_dict(d: dict):
    d = dict(d)
    kind = d.pop("kind")
    if kind in ("stadium", "lorentz"):
        if kind == "lorentz":
            layout = d.pop("layout", None)
            if layout == "single":
                return TableSpec.lorentz_single(**d)
            if "scatterers" in d:
                return TableSpec.lorentz([tuple(s) for s in d["scatterers"]])
            if layout in (None, "finite_horizon"):
                return TableSpec.lorentz_finite_horizon()
            raise ValidationError(f"unknown Lorentz layout {layout!r}")
        return TableSpec.stadium(**d)
    return SystemSpec(Kind(kind), **d)


def _system_name(system) -> str:
    return system.name


def orbit_for(system, seed: int, burn_in: int, length: int) -> np.ndarray:
    if isinstance(system, TableSpec):
        return billiard_orbit(system, seed, burn_in, length)
    return generate_orbit(system, seed, burn_in, length)


def metric_for(system) -> Metric:
    if isinstance(system, TableSpec):
        return Metric("billiard", system.perimeter)
    if system.is_solenoid:
        return Metric("solenoid")
    if system.kind is Kind.HENON:
        return Metric("euclidean")
    return Metric("circle")


def analytic_rate_inputs(system, dim_hat: float | None = None, epsilon: float = 0.01):
    """Rate-exponent inputs known in closed form, or ``None``.

    Exponential mixing is encoded as ``xi = alpha = inf``. Henon uses the
    measured local dimension.
    """
    inf = math.inf
    if isinstance(system, TableSpec):
        if system.kind == "lorentz":
            return bounds.RateInputs(inf, inf, 2.0, 1.0, epsilon, b=1.0, lebesgue_density=True)
        return bounds.RateInputs(inf, 1.0, 2.0, 1.0, epsilon, b=0.5, lebesgue_density=True)
    kind = system.kind
    if kind is Kind.DOUBLING:
        return bounds.RateInputs(inf, inf, 1.0, 1.0, epsilon, lebesgue_density=True)
    if kind is Kind.LSV:
        g = system.gamma
        return bounds.RateInputs(1.0 / g, 1.0 + 1.0 / g, 1.0, 1.0, epsilon, lebesgue_density=True)
    if kind is Kind.SMALE_SOLENOID:
        dh = 1.0 + math.log(2.0) / math.log(1.0 / system.theta)
        return bounds.RateInputs(inf, inf, dh, 1.0, epsilon)
    if kind is Kind.INTERMITTENT_SOLENOID:
        g = system.gamma
        if dim_hat is None or not np.isfinite(dim_hat) or dim_hat <= 0:
            return None
        return bounds.RateInputs(1.0 / g, 1.0 + 1.0 / g, float(dim_hat), 1.0, epsilon)
    if dim_hat is None or not np.isfinite(dim_hat) or dim_hat <= 0:
        return None
    return bounds.RateInputs(inf, inf, float(dim_hat), 1.0, epsilon)


def _uses_b(system) -> bool:
    return isinstance(system, TableSpec)


# -- configuration ---------------------------------------------------------------


@dataclass
class ExperimentConfig:
    """Declarative description of one ``(z, r)`` sweep on one system.

    ``radii`` is ``(r_max, ratio, count)``; ``centers`` is the number of
    centers sampled from the long orbit, added after ``explicit_centers``.
    """

    system: object
    horizon: float = 2.0
    radii: tuple = (2.0**-6, 0.5, 4)
    centers: int = 1
    explicit_centers: tuple = ()
    trials: int = 1000
    orbit_length: int = 1_000_000
    burn_in: int = 100_000
    trial_burn_in: int = 0
    epsilon: float = 0.01
    partition: int = 2
    first_hit_horizon: float = 10.0
    corona_exponent: float = 1.5
    master_seed: int = 20240611
    workers: int = 1

    def __post_init__(self):
        if isinstance(self.system, dict):
            self.system = system_from_dict(self.system)
        self.radii = tuple(self.radii)
        self.explicit_centers = tuple(tuple(float(v) for v in np.atleast_1d(c)) for c in self.explicit_centers)
        self.validate()

    def validate(self) -> None:
        r_max, ratio, count = self.radii
        if not (r_max > 0 and 0 < ratio < 1 and int(count) >= 1):
            raise ValidationError("radii need r_max > 0, 0 < ratio < 1 and count >= 1")
        if not 0 < self.horizon <= MAX_HORIZON:
            raise ValidationError(f"horizon must lie in (0, {MAX_HORIZON}]")
        if self.trials < MIN_TRIALS:
            raise ValidationError(f"trials must be >= {MIN_TRIALS}")
        if self.centers < 0 or self.centers + len(self.explicit_centers) == 0:
            raise ValidationError("need at least one center")
        if self.orbit_length < 1 or self.burn_in < 0 or self.trial_burn_in < 0:
            raise ValidationError("orbit lengths must be positive")
        if not 1 <= self.partition <= 4:
            raise ValidationError("partition must have 1..4 cells")
        if not self.epsilon > 0 or not self.first_hit_horizon > 0:
            raise ValidationError("epsilon and first_hit_horizon must be positive")
        if self.workers < 1:
            raise ValidationError("workers must be >= 1")
        ncols = 2 if isinstance(self.system, TableSpec) else self.system.ncols
        for c in self.explicit_centers:
            if len(c) != ncols:
                raise ValidationError(f"center {c} needs {ncols} coordinates")

    @property
    def radius_grid(self) -> np.ndarray:
        r_max, ratio, count = self.radii
        return r_max * ratio ** np.arange(int(count))

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d.pop("workers")  # output must not depend on it
        d["system"] = self.system.to_dict()
        d["radii"] = list(self.radii)
        d["explicit_centers"] = [list(c) for c in self.explicit_centers]
        return d

    @classmethod
    def from_dict(cls, d: dict, **overrides) -> "ExperimentConfig":
        d = {**d, **{k: v for k, v in overrides.items() if v is not None}}
        radii = d.get("radii")
        if isinstance(radii, dict):
            d["radii"] = (radii["r_max"], radii["ratio"], radii["count"])
        centers = d.get("centers")
        if isinstance(centers, dict):
            d["centers"] = centers.get("count", 0)
            d.setdefault("explicit_centers", centers.get("explicit", ()))
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValidationError(f"unknown config keys: {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_toml(cls, path, **overrides) -> "ExperimentConfig":
        with open(path, "rb") as fh:
            return cls.from_dict(tomllib.load(fh), **overrides)


# -- seeds -----------------------------------------------------------------------


def child_seed(master: int, *key: int) -> int:
    """64-bit seed mixed from the master seed and structured indices."""
    ss = np.random.SeedSequence(int(master), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def _system_key(system) -> int:
    return zlib.crc32(json.dumps(system.to_dict(), sort_keys=True).encode())


# -- results ---------------------------------------------------------------------


COLUMNS = (
    "system",
    "z_id",
    "z",
    "r",
    "horizon",
    "trials",
    "master_seed",
    "mu_hat",
    "mu_half_width",
    "dim_hat",
    "dim_se",
    "tv_counts",
    "fidi_tv",
    "fidi_se",
    "ks_exponential",
    "short_return_normalized",
    "short_return_p",
    "corona_ratio",
    "corona_delta",
    "bound_total",
    "exponent_a",
    "censored",
    "flag",
)


@dataclass
class ResultRow:
    system: str
    z_id: int
    z: tuple
    r: float
    horizon: float
    trials: int
    master_seed: int
    mu_hat: float = math.nan
    mu_half_width: float = math.nan
    dim_hat: float = math.nan
    dim_se: float = math.nan
    tv_counts: float = math.nan
    fidi_tv: float = math.nan
    fidi_se: float = math.nan
    ks_exponential: float = math.nan
    short_return_normalized: float = math.nan
    short_return_p: int = 0
    corona_ratio: float = math.nan
    corona_delta: float = math.nan
    bound_total: float = math.nan
    exponent_a: float = math.nan
    censored: int = 0
    flag: str = ""
    wall_time_ms: float = field(default=math.nan, compare=False)
    first_hits: np.ndarray | None = field(default=None, repr=False, compare=False)

    def as_record(self) -> list[str]:
        out = []
        for name in COLUMNS:
            v = getattr(self, name)
            if name == "z":
                out.append(";".join(_fmt(c) for c in v))
            elif isinstance(v, float):
                out.append(_fmt(v))
            else:
                out.append(str(v))
        return out


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_results(rows: Sequence[ResultRow], path, config: ExperimentConfig | None = None) -> Path:
    """CSV with fixed columns, a JSON sidecar and a separate timings file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow(row.as_record())
    data = buf.getvalue().encode()
    path.write_bytes(data)
    sidecar = {
        "columns": list(COLUMNS),
        "sha256": hashlib.sha256(data).hexdigest(),
        "config": config.to_dict() if config is not None else None,
    }
    path.with_suffix(".json").write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    timings = "".join(f"{r.system},{r.z_id},{_fmt(r.r)},{r.wall_time_ms:.1f}\n" for r in rows)
    path.with_suffix(".timings.csv").write_text("system,z_id,r,wall_time_ms\n" + timings)
    return path


def read_results(path) -> list[ResultRow]:
    rows = []
    types = {f.name: f.type for f in dataclasses.fields(ResultRow)}
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            kw = {}
            for name in COLUMNS:
                v = rec[name]
                if name == "z":
                    kw[name] = tuple(float(c) for c in v.split(";")) if v else ()
                elif types[name] in ("int", int):
                    kw[name] = int(v)
                elif types[name] in ("str", str):
                    kw[name] = v
                else:
                    kw[name] = float(v)
            rows.append(ResultRow(**kw))
    return rows


# -- trials ----------------------------------------------------------------------


@dataclass(frozen=True)
class _TrialTask:
    system: object
    center: tuple
    radius: float
    mu_hat: float
    horizon: float
    first_hit_horizon: float
    partition: int
    trial_burn_in: int
    seeds: tuple


def _run_trial_block(task: _TrialTask):
    """Counts on ``[0, T]``, per-cell counts and rescaled first hits."""
    metric = metric_for(task.system)
    last = math.floor(task.horizon / task.mu_hat)
    window = math.floor(max(task.horizon, task.first_hit_horizon) / task.mu_hat) + 1
    edges = np.linspace(0.0, task.horizon, task.partition + 1)
    totals = np.empty(len(task.seeds), dtype=np.int64)
    cells = np.empty((len(task.seeds), task.partition), dtype=np.int64)
    first = np.empty(len(task.seeds))
    for k, seed in enumerate(task.seeds):
        orbit = orbit_for(task.system, seed, task.trial_burn_in, window + 1)
        hits = np.flatnonzero(metric(orbit[1:], task.center) < task.radius) + 1
        in_range = hits[hits <= last]
        totals[k] = len(in_range)
        times = in_range * task.mu_hat
        cells[k] = np.histogram(times, bins=edges)[0]
        first[k] = hits[0] * task.mu_hat if len(hits) else math.inf
    return totals, cells, first


def _map(fn: Callable, tasks: list, workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


# -- run -------------------------------------------------------------------------


def _centers(config: ExperimentConfig, orbit: np.ndarray) -> list[tuple]:
    centers = list(config.explicit_centers)
    if config.centers:
        rng = np.random.default_rng(child_seed(config.master_seed, _system_key(config.system), CENTER_KEY))
        idx = np.sort(rng.choice(len(orbit), size=config.centers, replace=False))
        centers += [tuple(float(v) for v in orbit[i]) for i in idx]
    return centers


def _local_dim(profile: DistanceProfile, r: float) -> tuple[float, float]:
    radii = r * 2.0**DIM_OFFSETS
    mus = np.array([profile.count_within(x) for x in radii], dtype=float) / len(profile)
    keep = mus > 0
    try:
        return local_dimension(radii[keep], mus[keep])
    except (InsufficientGrid, DegenerateTarget):
        return math.nan, math.nan


def _cell_statistics(row: ResultRow, profile: DistanceProfile, config: ExperimentConfig):
    """Orbit-side diagnostics; returns the rate inputs used (or ``None``)."""
    r = row.r
    est = profile.measure(r, min_samples=1)
    row.mu_hat, row.mu_half_width = est.mean, est.half_width
    row.dim_hat, row.dim_se = _local_dim(profile, r)
    inputs = analytic_rate_inputs(config.system, row.dim_hat, config.epsilon)
    dim = inputs.dim_h if inputs is not None else row.dim_hat
    if np.isfinite(dim) and dim > config.epsilon:
        n, p = short_return_window(est.mean, config.horizon, dim, config.epsilon)
        row.short_return_p = p
        if n > p:
            try:
                row.short_return_normalized = profile.short_return_fraction(r, p)
            except DegenerateTarget:
                pass
    delta = r**config.corona_exponent
    row.corona_delta = delta
    row.corona_ratio = profile.corona_ratio(r, delta)
    if inputs is not None:
        try:
            eps, res = bounds.optimize_epsilon(inputs, use_b=_uses_b(config.system))
            row.exponent_a = res.exponent_a
            brk = bounds.prop_rate_bound(
                r, inputs.with_epsilon(eps), row.corona_ratio, row.short_return_normalized, est.mean, config.horizon
            )
            row.bound_total = brk.total
        except Infeasible:
            row.flag = _join(row.flag, "rate_infeasible")
    return inputs


def _join(flag: str, item: str) -> str:
    return f"{flag}|{item}" if flag else item


def _reduce_trials(row: ResultRow, totals, cells, first, config: ExperimentConfig) -> None:
    T = config.horizon
    row.tv_counts = tv_counts(CountLaw.empirical(totals), CountLaw.poisson(T))
    partition = equal_partition(T, config.partition)
    try:
        row.fidi_tv, row.fidi_se = fidi_tv_counts(cells, partition)
    except InsufficientSamples:
        row.flag = _join(row.flag, "fidi_insufficient")
    row.censored = int(np.isinf(first).sum())
    row.first_hits = first
    try:
        row.ks_exponential = ks_exponential(first)
    except AllCensored:
        row.flag = _join(row.flag, "all_censored")
    if row.censored:
        row.flag = _join(row.flag, "censored")


def run_experiment(config: ExperimentConfig, progress: Callable[[str], None] | None = None) -> list[ResultRow]:
    """One :class:`ResultRow` per ``(z, r)``; deterministic given ``config``."""
    config.validate()
    system = config.system
    skey = _system_key(system)
    name = _system_name(system)
    orbit = orbit_for(system, child_seed(config.master_seed, skey, ORBIT_KEY), config.burn_in, config.orbit_length)
    centers = _centers(config, orbit)
    metric = metric_for(system)
    radii = config.radius_grid

    rows: list[ResultRow] = []
    tasks: list[_TrialTask] = []
    owners: list[int] = []
    starts: dict[int, float] = {}
    for zi, z in enumerate(centers):
        profile = DistanceProfile.from_orbit(orbit, z, metric)
        for ri, r in enumerate(radii):
            t0 = time.perf_counter()
            row = ResultRow(name, zi, z, float(r), config.horizon, config.trials, config.master_seed)
            rows.append(row)
            try:
                _cell_statistics(row, profile, config)
            except DegenerateTarget:
                row.flag = _join(row.flag, "degenerate")
                continue
            seeds = [child_seed(config.master_seed, skey, zi, ri, t) for t in range(config.trials)]
            for b in range(0, config.trials, TRIAL_BLOCK):
                tasks.append(
                    _TrialTask(
                        system, z, float(r), row.mu_hat, config.horizon, config.first_hit_horizon,
                        config.partition, config.trial_burn_in, tuple(seeds[b : b + TRIAL_BLOCK]),
                    )
                )
                owners.append(len(rows) - 1)
            starts[len(rows) - 1] = time.perf_counter() - t0
        del profile
    del orbit

    t0 = time.perf_counter()
    results = _map(_run_trial_block, tasks, config.workers)
    per_task = (time.perf_counter() - t0) / max(len(tasks), 1)
    merged: dict[int, list] = {}
    for owner, res in zip(owners, results):
        merged.setdefault(owner, []).append(res)
    for idx, parts in merged.items():
        row = rows[idx]
        totals = np.concatenate([p[0] for p in parts])
        cells = np.concatenate([p[1] for p in parts])
        first = np.concatenate([p[2] for p in parts])
        _reduce_trials(row, totals, cells, first, config)
        row.wall_time_ms = 1000.0 * (starts[idx] + per_task * len(parts))
        if progress is not None:
            progress(f"{row.system} z{row.z_id} r={row.r:.4g}: tv={row.tv_counts:.4f} ks={row.ks_exponential:.4f}")
    return rows


# -- fitting ---------------------------------------------------------------------


class FitResult(dict):
    """``slope``, ``stderr`` and the radii excluded for non-positive values."""

    @property
    def slope(self) -> float:
        return self["slope"]

    @property
    def stderr(self) -> float:
        return self["stderr"]

    @property
    def excluded(self) -> list:
        return self["excluded"]

    def __iter__(self):
        return iter((self.slope, self.stderr))


def fit_rate(rows: Sequence[ResultRow], statistic: str = "tv_counts") -> FitResult:
    """Least-squares slope of ``log(statistic)`` against ``log r``.

    Unpacks as ``(slope, stderr)``.
    """
    r = np.array([row.r for row in rows], dtype=float)
    v = np.array([getattr(row, statistic) for row in rows], dtype=float)
    ok = np.isfinite(v) & (v > 0)
    excluded = [float(x) for x in r[~ok]]
    if ok.sum() < 4:
        raise InsufficientGrid(f"need >= 4 radii with positive {statistic}, got {int(ok.sum())}")
    fit = stats.linregress(np.log(r[ok]), np.log(v[ok]))
    return FitResult(slope=float(fit.slope), stderr=float(fit.stderr), excluded=excluded)


# -- selftest --------------------------------------------------------------------


def _suite_stein_chen() -> str:
    worst = 0.0
    for n in range(1, 31):
        for q in np.arange(1, 51) / 100.0:
            tv = bounds.exact_binomial_poisson_tv(n, float(q))
            bound = bounds.stein_chen_iid_bound(n, float(q))
            if tv > bound:
                raise AssertionError(f"n={n}, q={q:.2f}: tv {tv:.3g} > {bound:.3g}")
            worst = max(worst, tv / bound)
    return f"max tv/bound = {worst:.3f}"


def _suite_tv_axioms() -> str:
    rng = np.random.default_rng(7)
    laws = [CountLaw.poisson(lam, 30) for lam in (0.5, 1.0, 2.0)]
    for _ in range(20):
        p = rng.random(rng.integers(2, 12))
        laws.append(CountLaw(p / p.sum()))
    for a in laws:
        if tv_counts(a, a) != 0.0:
            raise AssertionError("d(a, a) != 0")
        for b in laws:
            dab = tv_counts(a, b)
            if not 0.0 <= dab <= 1.0 + 1e-15 or abs(dab - tv_counts(b, a)) > 1e-15:
                raise AssertionError("range or symmetry violated")
            for c in laws[::4]:
                if dab > tv_counts(a, c) + tv_counts(c, b) + 1e-12:
                    raise AssertionError("triangle inequality violated")
    return f"{len(laws)} laws"


RATE_ORACLE = {
    "thm1_a": 0.000608,  # (2, 3, 2, 1, 0.04): eps^2/dh - 3 eps^3
    "thm2_b1": 4.7e-05,  # (2, 6, 2, 1, 0.01, b=1)
}


def _suite_rate_oracle() -> str:
    a1 = bounds.rate_thm1(bounds.RateInputs(2, 3, 2, 1, 0.04)).exponent_a
    if abs(a1 - RATE_ORACLE["thm1_a"]) > 1e-6 * RATE_ORACLE["thm1_a"]:
        raise AssertionError(f"rate_thm1 worked value {a1!r}")
    a2 = bounds.rate_thm2(bounds.RateInputs(2, 6, 2, 1, 0.01, b=1.0)).exponent_a
    if abs(a2 - RATE_ORACLE["thm2_b1"]) > 1e-6 * RATE_ORACLE["thm2_b1"]:
        raise AssertionError(f"rate_thm2 value {a2!r}")
    base = bounds.RateInputs(2, 6, 2, 1, 0.01)
    a_inf = bounds.rate_thm2(dataclasses.replace(base, b=1e12)).exponent_a
    a_ref = bounds.rate_thm1(base).exponent_a
    if abs(a_inf - a_ref) > 1e-6 * abs(a_ref):
        raise AssertionError("rate_thm2 does not approach rate_thm1 as b grows")
    return f"a = {a1:.6g}, {a2:.3g}"


def _suite_billiard_reversibility() -> str:
    worst = 0.0
    for table in (TableSpec.stadium(), TableSpec.lorentz_finite_horizon()):
        orbit = billiard_orbit(table, 11, burn_in=10, length=3)
        for state in orbit:
            worst = max(worst, reversal_error(state, table, steps=100))
    if worst > 1e-6:
        raise AssertionError(f"reversal error {worst:.3g}")
    return f"max reversal error {worst:.2g}"


SELFTEST_SUITES = {
    "stein_chen": _suite_stein_chen,
    "tv_axioms": _suite_tv_axioms,
    "rate_oracle": _suite_rate_oracle,
    "billiard_reversibility": _suite_billiard_reversibility,
}


def selftest(out=print) -> dict[str, bool]:
    """Run every suite, print one verdict line each; returns suite -> passed."""
    verdicts = {}
    for name, suite in SELFTEST_SUITES.items():
        t0 = time.perf_counter()
        try:
            msg = suite()
            ok = True
        except Exception as exc:  # a failing suite must not stop the others
            msg, ok = f"{type(exc).__name__}: {exc}", False
        verdicts[name] = ok
        out(f"{'PASS' if ok else 'FAIL'} {name} ({time.perf_counter() - t0:.1f} s) {msg}")
    return verdicts
