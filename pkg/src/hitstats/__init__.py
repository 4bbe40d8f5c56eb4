"""Hitting-time statistics and Poisson approximation for chaotic systems."""

from .billiards import CollisionState, TableSpec, billiard_orbit, billiard_step, boundary_point
from .bounds import RateInputs, RateResult, optimize_epsilon, rate_thm1, rate_thm2
from .errors import HitStatsError
from .harness import ExperimentConfig, ResultRow, fit_rate, run_experiment, selftest
from .measure import BallTarget, DistanceProfile, Metric, estimate_ball_measure, local_dimension
from .pointproc import CountLaw, PointPattern, fidi_tv, ks_exponential, tv_counts
from .systems import Kind, SystemSpec, generate_orbit

__version__ = "0.1.0"

__all__ = [
    "BallTarget",
    "CollisionState",
    "CountLaw",
    "DistanceProfile",
    "ExperimentConfig",
    "HitStatsError",
    "Kind",
    "Metric",
    "PointPattern",
    "RateInputs",
    "RateResult",
    "ResultRow",
    "SystemSpec",
    "TableSpec",
    "billiard_orbit",
    "billiard_step",
    "boundary_point",
    "estimate_ball_measure",
    "fidi_tv",
    "fit_rate",
    "generate_orbit",
    "ks_exponential",
    "local_dimension",
    "optimize_epsilon",
    "rate_thm1",
    "rate_thm2",
    "run_experiment",
    "selftest",
    "tv_counts",
]
