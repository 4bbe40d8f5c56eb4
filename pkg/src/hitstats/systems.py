"""Smooth example systems: step maps and seeded orbit generation.

Phase points are stored as rows of a 2-D float array:

* interval systems (doubling, LSV): ``(x,)``
* solenoids (solid torus ``S^1 x D``): ``(x, Re z, Im z)``
* Henon: ``(x, y)``

The doubling map is iterated exactly through its binary shift: a point is an
infinite i.i.d. bit string drawn from the seeded generator, and the ``n``-th
iterate is the 53-bit truncation of the string shifted by ``n``. Naive floating
point iteration of ``2x mod 1`` collapses to 0 after ~53 steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numba
import numpy as np
from scipy.signal import lfilter

from .errors import Escaped, InvalidSpec, SeedExhausted

__all__ = [
    "Kind",
    "SystemSpec",
    "doubling_step",
    "lsv_step",
    "solenoid_step",
    "henon_step",
    "generate_orbit",
    "initial_point",
    "make_rng",
]

MAX_ESCAPES = 1000
_TWO_PI = 2.0 * math.pi


class Kind(str, Enum):
    DOUBLING = "doubling"
    LSV = "lsv"
    INTERMITTENT_SOLENOID = "intermittent_solenoid"
    SMALE_SOLENOID = "smale_solenoid"
    HENON = "henon"


@dataclass(frozen=True)
class SystemSpec:
    """Parameters of one smooth system.

    ``gamma`` is the intermittency exponent of the LSV base map, ``theta`` the
    disk contraction of the solenoids, ``a``/``b`` the Henon coefficients and
    ``box`` the half-width of the Henon trapping box ``[-box, box]^2``.
    """

    kind: Kind
    gamma: float = 0.5
    theta: float = 0.1
    a: float = 1.4
    b: float = 0.3
    box: float = 3.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind in (Kind.LSV, Kind.INTERMITTENT_SOLENOID):
            if not 0.0 < self.gamma < 1.0:
                raise InvalidSpec(f"gamma must lie in (0, 1), got {self.gamma}")
        if self.kind in (Kind.SMALE_SOLENOID, Kind.INTERMITTENT_SOLENOID):
            if self.theta <= 0.0:
                raise InvalidSpec("theta must be positive")
            if self.theta * self.sup_base_derivative >= 1.0 - self.theta:
                raise InvalidSpec(
                    f"theta={self.theta} breaks theta*sup|Dg| < 1 - theta "
                    f"(sup|Dg| = {self.sup_base_derivative})"
                )
        if self.kind is Kind.HENON and self.box <= 0.0:
            raise InvalidSpec("trapping box must have positive size")

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def ncols(self) -> int:
        return {Kind.DOUBLING: 1, Kind.LSV: 1, Kind.HENON: 2}.get(self.kind, 3)

    @property
    def is_solenoid(self) -> bool:
        return self.kind in (Kind.SMALE_SOLENOID, Kind.INTERMITTENT_SOLENOID)

    @property
    def sup_base_derivative(self) -> float:
        # LSV left branch x + 2^g x^(1+g) has derivative 1 + (1+g)(2x)^g <= 2 + g
        if self.kind in (Kind.LSV, Kind.INTERMITTENT_SOLENOID):
            return 2.0 + self.gamma
        return 2.0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "gamma": self.gamma,
            "theta": self.theta,
            "a": self.a,
            "b": self.b,
            "box": self.box,
        }


def _wrap(x: float) -> float:
    y = x - math.floor(x)
    return 0.0 if y >= 1.0 else y


def doubling_step(x: float) -> float:
    return _wrap(2.0 * x)


def lsv_step(x: float, gamma: float) -> float:
    """Liverani-Saussol-Vaienti map with a neutral fixed point at 0."""
    if x < 0.5:
        return _wrap(x * (1.0 + (2.0 * x) ** gamma))
    return _wrap(2.0 * x - 1.0)


def solenoid_step(x: float, z: complex, spec: SystemSpec) -> tuple[float, complex]:
    """One step of ``(x, z) -> (g(x), theta*z + e^{2 pi i x}/2)``."""
    if not spec.is_solenoid:
        raise InvalidSpec(f"{spec.kind.value} is not a solenoid")
    if spec.kind is Kind.SMALE_SOLENOID:
        x1 = doubling_step(x)
    else:
        x1 = lsv_step(x, spec.gamma)
    z1 = spec.theta * z + 0.5 * complex(math.cos(_TWO_PI * x), math.sin(_TWO_PI * x))
    return x1, z1


def henon_step(x: float, y: float, a: float = 1.4, b: float = 0.3, box: float = 3.0) -> tuple[float, float]:
    x1 = 1.0 - a * x * x + y
    y1 = b * x
    if not (abs(x1) <= box and abs(y1) <= box):
        raise Escaped(f"Henon image ({x1}, {y1}) left the box [-{box}, {box}]^2")
    return x1, y1


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


def initial_point(spec: SystemSpec, rng: np.random.Generator) -> np.ndarray:
    """Draw one point from the uniform law on the phase space."""
    if spec.kind in (Kind.DOUBLING, Kind.LSV):
        return np.array([rng.random()])
    if spec.is_solenoid:
        x, u, v = rng.random(3)
        rad = math.sqrt(u)
        return np.array([x, rad * math.cos(_TWO_PI * v), rad * math.sin(_TWO_PI * v)])
    return rng.uniform(-spec.box, spec.box, size=2)


# -- doubling map via the binary shift ----------------------------------------

_CHUNK = 1 << 20


def _shift_orbit(rng: np.random.Generator, burn_in: int, length: int) -> np.ndarray:
    """53-bit truncations of ``2^n x0 mod 1`` for ``n = burn_in .. burn_in+length-1``."""
    nwords = (burn_in + length + 53) // 64 + 2
    words = rng.integers(0, 2**64, size=nwords, dtype=np.uint64)
    out = np.empty(length, dtype=np.float64)
    six, mask, sixty_four = np.uint64(6), np.uint64(63), np.uint64(64)
    for start in range(0, length, _CHUNK):
        stop = min(start + _CHUNK, length)
        n = np.arange(burn_in + start, burn_in + stop, dtype=np.uint64)
        q = (n >> six).astype(np.int64)
        s = n & mask
        hi = words[q] << s
        lo = np.where(s == 0, np.uint64(0), words[q + 1] >> ((sixty_four - s) & mask))
        out[start:stop] = ((hi | lo) >> np.uint64(11)).astype(np.float64)
    out *= 2.0**-53
    return out


# -- compiled kernels ------------------------------------------------------------


@numba.njit(cache=True)
def _lsv_run(x0, gamma, burn_in, length, out):
    x = x0
    for _ in range(burn_in):
        if x < 0.5:
            x = x * (1.0 + (2.0 * x) ** gamma)
        else:
            x = 2.0 * x - 1.0
        if x >= 1.0:
            x -= 1.0
    for i in range(length):
        out[i] = x
        if x < 0.5:
            x = x * (1.0 + (2.0 * x) ** gamma)
        else:
            x = 2.0 * x - 1.0
        if x >= 1.0:
            x -= 1.0


@numba.njit(cache=True)
def _henon_run(x0, y0, a, b, box, burn_in, length, out):
    """Returns -1 on success or the step index at which the orbit escaped."""
    x = x0
    y = y0
    for i in range(burn_in + length):
        if i >= burn_in:
            out[i - burn_in, 0] = x
            out[i - burn_in, 1] = y
        x1 = 1.0 - a * x * x + y
        y = b * x
        x = x1
        if not (abs(x) <= box and abs(y) <= box):
            return i
    return -1


def _disk_coordinate(x: np.ndarray, z0: complex, theta: float) -> np.ndarray:
    """Solve ``z[n+1] = theta*z[n] + e^{2 pi i x[n]}/2`` as a linear recursion."""
    z = np.empty(len(x), dtype=np.complex128)
    z[0] = z0
    if len(x) > 1:
        forcing = 0.5 * np.exp(2j * np.pi * x[:-1])
        z[1:] = lfilter([1.0], [1.0, -theta], forcing, zi=[theta * z0])[0]
    return z


def generate_orbit(spec: SystemSpec, seed: int, burn_in: int = 100_000, length: int = 1) -> np.ndarray:
    """Deterministic orbit of ``length`` states after discarding ``burn_in``.

    The initial point is drawn from the uniform law on the phase space using a
    PCG64 stream seeded by ``seed``. Henon initial points that escape the
    trapping box are redrawn from the same stream.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if burn_in < 0:
        raise ValueError("burn_in must be >= 0")
    rng = make_rng(seed)
    kind = spec.kind

    if kind is Kind.DOUBLING:
        return _shift_orbit(rng, burn_in, length)[:, None]

    if kind is Kind.LSV:
        out = np.empty(length)
        _lsv_run(float(rng.random()), spec.gamma, burn_in, length, out)
        return out[:, None]

    if spec.is_solenoid:
        p0 = initial_point(spec, rng)
        total = burn_in + length
        if kind is Kind.SMALE_SOLENOID:
            # base coordinate comes from the exact shift stream; p0[0] is unused
            x = _shift_orbit(rng, 0, total)
        else:
            x = np.empty(total)
            _lsv_run(p0[0], spec.gamma, 0, total, x)
        z = _disk_coordinate(x, complex(p0[1], p0[2]), spec.theta)
        out = np.empty((length, 3))
        out[:, 0] = x[burn_in:]
        out[:, 1] = z[burn_in:].real
        out[:, 2] = z[burn_in:].imag
        return out

    # Henon
    out = np.empty((length, 2))
    for _ in range(MAX_ESCAPES):
        x0, y0 = initial_point(spec, rng)
        if _henon_run(x0, y0, spec.a, spec.b, spec.box, burn_in, length, out) < 0:
            return out
    raise SeedExhausted(f"{MAX_ESCAPES} consecutive Henon initial points escaped")
