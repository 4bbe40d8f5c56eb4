"""Rate exponents and assembled error bounds for the Poisson approximation.

Symbols: ``xi`` return-time tail exponent, ``alpha`` polynomial contraction
exponent of (un)stable manifolds, ``dim_h`` local dimension of the invariant
measure, ``dim_u`` dimension of unstable manifolds, ``b`` regularity exponent
of the induced measurable partition, ``epsilon`` the free small parameter.

Unknown multiplicative constants are set to 1 everywhere; assembled bounds are
"shape only".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import stats

from .errors import Infeasible

__all__ = [
    "RateInputs",
    "RateResult",
    "BoundBreakdown",
    "BRANCHES",
    "evaluate_rate",
    "rate_thm1",
    "rate_thm2",
    "optimize_epsilon",
    "epsilon_cap",
    "stein_chen_iid_bound",
    "exact_binomial_poisson_tv",
    "lemma_a_bound_terms",
    "prop_rate_bound",
]

BRANCHES = ("xi_branch", "corona_branch", "epsilon_sq_branch", "cap_branch")
MAX_EXACT_N = 30


@dataclass(frozen=True)
class RateInputs:
    xi: float
    alpha: float
    dim_h: float
    dim_u: float
    epsilon: float = 0.01
    b: float | None = None
    lebesgue_density: bool = False

    def __post_init__(self):
        for name in ("alpha", "dim_h", "dim_u", "epsilon"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if not self.xi > 1:
            raise ValueError("xi must be > 1")
        if self.b is not None and not self.b > 0:
            raise ValueError("b must be > 0")

    def with_epsilon(self, epsilon: float) -> "RateInputs":
        return replace(self, epsilon=epsilon)


@dataclass
class RateResult:
    feasible: bool
    exponent_a: float | None
    binding_term: str | None
    branches: dict = field(default_factory=dict)
    constraint_report: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "exponent_a": self.exponent_a,
            "binding_term": self.binding_term,
            "branches": dict(self.branches),
            "constraint_report": dict(self.constraint_report),
            "notes": list(self.notes),
        }


@dataclass
class BoundBreakdown:
    n: int | None = None
    p: int | None = None
    term_short_returns: float = 0.0
    term_quadratic: float = 0.0
    term_boundary: float = 0.0
    term_corona: float = 0.0
    term_corona_sq: float = 0.0
    term_power: float = 0.0
    power_terms: dict = field(default_factory=dict)
    not_estimable: tuple = ()
    label: str = "shape only"

    @property
    def total(self) -> float:
        return (
            self.term_short_returns
            + self.term_quadratic
            + self.term_boundary
            + self.term_corona
            + self.term_corona_sq
            + self.term_power
        )


def _effective_unstable_dim(dim_u: float, b: float | None) -> float:
    if b is None:
        return dim_u
    return b * dim_u / (b + dim_u)


def epsilon_cap(dim_h: float, dim_u: float, b: float | None = None) -> float:
    """Upper limit on epsilon: ``min(min(du, dh)/24, 1/(3 dh))``."""
    du = _effective_unstable_dim(dim_u, b)
    return min(min(du, dim_h) / 24.0, 1.0 / (3.0 * dim_h))


def _branches(inp: RateInputs, du: float, density: bool) -> dict:
    dh, eps, xi, alpha = inp.dim_h, inp.epsilon, inp.xi, inp.alpha
    shrink = (dh - eps) ** 2 / dh
    if density:
        corona = shrink * alpha - 1.0
    else:
        corona = ((1.0 + shrink * alpha) * du - 2.0 * dh - 2.0 * eps) / 2.0
    return {
        "xi_branch": shrink * (xi - 1.0),
        "corona_branch": corona,
        "epsilon_sq_branch": eps**2 / dh - 3.0 * eps**3,
        "cap_branch": min(du, dh) / 12.0 - 2.0 * eps,
    }


def _constraints(inp: RateInputs, du: float, density: bool) -> dict:
    """Margins (value minus threshold); all must be positive."""
    dh, eps, alpha = inp.dim_h, inp.epsilon, inp.alpha
    squeeze = (1.0 - eps / dh) ** 2
    report = {
        "epsilon_cap": epsilon_cap(dh, du) - eps,
        "alpha_dimension": alpha - (1.0 / dh) / squeeze,
    }
    if not density:
        report["alpha_theorem"] = alpha - (2.0 / du - 1.0 / dh)
        report["alpha_corona"] = alpha - (2.0 / du - 1.0 / dh + 2.0 * eps / (du * dh)) / squeeze
    return report


def _evaluate(inp: RateInputs, du: float, density: bool) -> RateResult:
    report = _constraints(inp, du, density)
    violated = [name for name, margin in report.items() if not margin > 0]
    branches = _branches(inp, du, density)
    if violated:
        return RateResult(False, None, None, branches, report, [f"violated: {', '.join(violated)}"])
    binding = min(BRANCHES, key=lambda k: branches[k])
    return RateResult(True, branches[binding], binding, branches, report)


def evaluate_rate(inputs: RateInputs, use_b: bool = False) -> RateResult:
    """Non-raising evaluation; ``use_b`` selects the partition-regularity variant.

    With ``lebesgue_density`` set both branch sets are evaluated and the larger
    feasible exponent is returned.
    """
    du = _effective_unstable_dim(inputs.dim_u, inputs.b if use_b else None)
    general = _evaluate(inputs, du, density=False)
    if not inputs.lebesgue_density:
        return general
    dense = _evaluate(inputs, du, density=True)
    candidates = [r for r in (general, dense) if r.feasible]
    if not candidates:
        dense.notes.append("general branch set also infeasible")
        return dense
    best = max(candidates, key=lambda r: r.exponent_a)
    other = general if best is dense else dense
    best.notes.append(
        "density branch set chosen" if best is dense else "general branch set chosen"
    )
    if other.feasible:
        best.notes.append(f"alternative exponent {other.exponent_a!r}")
    return best


def _raise_if_infeasible(result: RateResult) -> RateResult:
    if not result.feasible:
        first = next(k for k, m in result.constraint_report.items() if not m > 0)
        raise Infeasible(first, result)
    return result


def rate_thm1(inputs: RateInputs) -> RateResult:
    """Exponent ``a`` for systems with a first-return Young structure (``b`` ignored)."""
    return _raise_if_infeasible(evaluate_rate(inputs, use_b=False))


def rate_thm2(inputs: RateInputs) -> RateResult:
    """Exponent ``a`` with ``dim_u`` replaced by ``b*dim_u/(b+dim_u)``."""
    if inputs.b is None:
        raise ValueError("rate_thm2 needs the partition exponent b")
    return _raise_if_infeasible(evaluate_rate(inputs, use_b=True))


def optimize_epsilon(inputs: RateInputs, grid_size: int = 400, use_b: bool | None = None, span: float = 1e-6):
    """Maximise the exponent over a log-uniform epsilon grid below the cap.

    The grid runs from ``span * cap`` up to (excluding) the cap. Returns
    ``(epsilon, RateResult)``.
    """
    if grid_size < 100:
        raise ValueError("grid_size must be >= 100")
    if use_b is None:
        use_b = inputs.b is not None
    cap = epsilon_cap(inputs.dim_h, inputs.dim_u, inputs.b if use_b else None)
    grid = np.geomspace(span * cap, cap, grid_size + 1)[:-1]
    best_eps, best = None, None
    for eps in grid:
        res = evaluate_rate(inputs.with_epsilon(float(eps)), use_b=use_b)
        if res.feasible and (best is None or res.exponent_a > best.exponent_a):
            best_eps, best = float(eps), res
    if best is None:
        last = evaluate_rate(inputs.with_epsilon(float(grid[0])), use_b=use_b)
        first = next(k for k, m in last.constraint_report.items() if not m > 0)
        raise Infeasible(first, last)
    return best_eps, best


def stein_chen_iid_bound(n: int, q: float) -> float:
    return 4.0 * n * q * q


def exact_binomial_poisson_tv(n: int, q: float) -> float:
    """``d_TV(Binomial(n, q), Poisson(nq))`` by direct enumeration."""
    if n > MAX_EXACT_N:
        raise ValueError(f"n must be <= {MAX_EXACT_N}")
    if not 0.0 <= q <= 1.0:
        raise ValueError("q must be a probability")
    lam = n * q
    ks = np.arange(n + 1)
    binom = stats.binom.pmf(ks, n, q)
    pois = stats.poisson.pmf(ks, lam)
    # Binomial has no mass above n; Poisson's tail enters in full
    tail = float(stats.poisson.sf(n, lam)) if lam > 0 else 0.0
    return float(0.5 * (np.abs(binom - pois).sum() + tail))


def lemma_a_bound_terms(n: int, p: int, mu_hat: float, short_return_normalized: float) -> BoundBreakdown:
    """Empirically computable terms of the dependent-vs-independent comparison.

    The decorrelation sum needs the tower structure and is omitted.
    """
    if not n > p >= 1:
        raise ValueError("need n > p >= 1")
    return BoundBreakdown(
        n=n,
        p=p,
        term_short_returns=4.0 * (n - p) * mu_hat * short_return_normalized,
        term_quadratic=4.0 * p * (n - p) * mu_hat**2,
        term_boundary=4.0 * p * mu_hat,
        not_estimable=("decorrelation",),
    )


def _rpow(r: float, e: float) -> float:
    if math.isinf(e):
        return 1.0 if r == 1.0 else 0.0
    return r**e


def prop_rate_bound(
    r: float,
    inputs: RateInputs,
    corona_ratio: float,
    short_return_normalized: float,
    mu_hat: float | None = None,
    horizon: float | None = None,
) -> BoundBreakdown:
    """Six-term bound on the TV distance with unit constants.

    When ``mu_hat`` and ``horizon`` are given, ``n`` and ``p`` are filled in.
    """
    dh, eps, xi = inputs.dim_h, inputs.epsilon, inputs.xi
    powers = {
        "measure": _rpow(r, dh - eps),
        "decorrelation": _rpow(r, (dh - eps) ** 2 * (xi - 1.0) / dh),
        "epsilon": _rpow(r, eps * (dh - eps) / dh),
    }
    n = p = None
    if mu_hat is not None and horizon is not None:
        n = int(math.floor(horizon / mu_hat))
        p = max(1, int(math.floor(n ** ((dh - eps) / dh))))
    return BoundBreakdown(
        n=n,
        p=p,
        term_short_returns=short_return_normalized,
        term_corona=corona_ratio,
        term_corona_sq=corona_ratio**2,
        term_power=sum(powers.values()),
        power_terms=powers,
    )
