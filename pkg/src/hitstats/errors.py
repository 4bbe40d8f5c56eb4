"""Exception types shared across the package."""


class HitStatsError(Exception):
    """Base class for all errors raised by hitstats."""


class InvalidSpec(HitStatsError, ValueError):
    """A system or table specification violates its invariants."""


class Escaped(HitStatsError):
    """An orbit left the trapping region."""


class SeedExhausted(HitStatsError):
    """Too many consecutive initial conditions were rejected."""


class Tangency(HitStatsError):
    """A collision came closer to grazing than the tangency guard allows."""


class NoIntersection(HitStatsError, AssertionError):
    """A free flight found no boundary; only possible on geometry bugs."""


class DegenerateTarget(HitStatsError):
    """The ball is too small to be seen by the orbit sample."""


class InsufficientGrid(HitStatsError, ValueError):
    """A log-log fit was requested with too few usable radii."""


class InsufficientSamples(HitStatsError, ValueError):
    """Too few samples for the requested statistic."""


class AllCensored(HitStatsError):
    """No first hit was observed inside the window."""


class Infeasible(HitStatsError):
    """Rate-exponent constraints are violated.

    ``constraint`` names the first violated constraint and ``result`` holds the
    full :class:`~hitstats.bounds.RateResult` with its margin report.
    """

    def __init__(self, constraint, result=None):
        super().__init__(f"infeasible: constraint {constraint!r} violated")
        self.constraint = constraint
        self.result = result


class ValidationError(HitStatsError, ValueError):
    """An experiment configuration failed validation."""
