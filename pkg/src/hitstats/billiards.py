"""Billiard collision maps: Bunimovich stadium and periodic Lorentz gas.

A collision state is ``(s, phi)``: ``s`` is arc length along the boundary and
``phi`` the angle of the outgoing velocity measured from the normal pointing
into the billiard domain, positive towards increasing ``s``. With unit tangent
``t`` and inward normal ``n`` the outgoing velocity is
``cos(phi) n + sin(phi) t``.

Stadium boundary, counter-clockwise from the left end of the bottom flat:
bottom flat, right semicircle, top flat, left semicircle. Lorentz boundaries
are the scatterer circles in order, each parametrised counter-clockwise from
angle 0; the domain is the unit torus minus the disks.

Double precision kernels (numba) drive long orbits. :func:`billiard_step_precise`
repeats the same geometry in mpmath arithmetic; chaotic orbits amplify
round-off exponentially, so exact time-reversal over many collisions is only
checkable at raised precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import mpmath
import numba
import numpy as np

from .errors import InvalidSpec, NoIntersection, SeedExhausted, Tangency
from .systems import MAX_ESCAPES, make_rng

__all__ = [
    "TableSpec",
    "CollisionState",
    "Flight",
    "boundary_point",
    "billiard_step",
    "trace_flight",
    "billiard_orbit",
    "billiard_step_precise",
    "reverse",
    "reversal_error",
    "free_path_bruteforce",
    "horizon_estimate",
    "TANGENCY_GUARD",
    "GEOMETRY_EPSILON",
]

TANGENCY_GUARD = 1e-6
GEOMETRY_EPSILON = 1e-12
MIN_FLIGHT = 10 * GEOMETRY_EPSILON
MAX_CELLS = 50_000_000

OK, TANGENT, LOST = 0, 1, 2
_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class TableSpec:
    """Billiard table: ``kind`` is ``"stadium"`` or ``"lorentz"``.

    Stadium: semicircle radius ``rc`` and flat length ``flat``. Lorentz:
    ``scatterers`` is a tuple of ``(cx, cy, radius)`` on the unit torus.
    """

    kind: str
    rc: float = 1.0
    flat: float = 2.0
    scatterers: tuple = ()

    def __post_init__(self):
        if self.kind == "stadium":
            if not self.rc > 0 or self.flat < 0:
                raise InvalidSpec("stadium needs rc > 0 and flat >= 0")
        elif self.kind == "lorentz":
            sc = tuple(tuple(float(v) for v in d) for d in self.scatterers)
            object.__setattr__(self, "scatterers", sc)
            if not sc:
                raise InvalidSpec("Lorentz gas needs at least one scatterer")
            for cx, cy, rho in sc:
                if not 0 < rho < 0.5:
                    raise InvalidSpec("scatterer radius must lie in (0, 1/2)")
            for i, (xi, yi, ri) in enumerate(sc):
                for xj, yj, rj in sc[i + 1 :]:
                    dx = abs(xi - xj) % 1.0
                    dy = abs(yi - yj) % 1.0
                    d = math.hypot(min(dx, 1 - dx), min(dy, 1 - dy))
                    if d <= ri + rj:
                        raise InvalidSpec("scatterers overlap on the torus")
        else:
            raise InvalidSpec(f"unknown table kind {self.kind!r}")

    @classmethod
    def stadium(cls, rc: float = 1.0, flat: float = 2.0) -> "TableSpec":
        return cls("stadium", rc=rc, flat=flat)

    @classmethod
    def lorentz(cls, scatterers) -> "TableSpec":
        return cls("lorentz", scatterers=tuple(scatterers))

    @classmethod
    def lorentz_single(cls, rho: float = 0.25) -> "TableSpec":
        """One disk at the lattice points; infinite horizon."""
        return cls.lorentz([(0.0, 0.0, rho)])

    @classmethod
    def lorentz_finite_horizon(cls) -> "TableSpec":
        """Disks at cell centers (0.4) and corners (0.2); every free path is bounded."""
        return cls.lorentz([(0.5, 0.5, 0.4), (0.0, 0.0, 0.2)])

    @property
    def name(self) -> str:
        return self.kind

    @property
    def perimeter(self) -> float:
        if self.kind == "stadium":
            return 2.0 * self.flat + 2.0 * math.pi * self.rc
        return sum(2.0 * math.pi * r for _, _, r in self.scatterers)

    def arrays(self):
        sc = np.array(self.scatterers, dtype=np.float64).reshape(-1, 3)
        offsets = np.concatenate([[0.0], np.cumsum(2.0 * np.pi * sc[:, 2])])
        return sc[:, 0].copy(), sc[:, 1].copy(), sc[:, 2].copy(), offsets

    def to_dict(self) -> dict:
        if self.kind == "stadium":
            return {"kind": "stadium", "rc": self.rc, "flat": self.flat}
        return {"kind": "lorentz", "scatterers": [list(s) for s in self.scatterers]}


class CollisionState(NamedTuple):
    s: float
    phi: float


class Flight(NamedTuple):
    start: np.ndarray
    end: np.ndarray
    time: float
    incoming_angle: float
    state: CollisionState


# -- stadium kernels -----------------------------------------------------------


@numba.njit(cache=True)
def _stadium_point(s, rc, flat):
    """Position, inward normal and unit tangent at arc length ``s``."""
    h = 0.5 * flat
    arc = math.pi * rc
    if s < flat:
        return -h + s, -rc, 0.0, 1.0, 1.0, 0.0
    if s < flat + arc:
        th = -_HALF_PI + (s - flat) / rc
        c, sn = math.cos(th), math.sin(th)
        return h + rc * c, rc * sn, -c, -sn, -sn, c
    if s < 2.0 * flat + arc:
        return h - (s - flat - arc), rc, 0.0, -1.0, -1.0, 0.0
    th = _HALF_PI + (s - 2.0 * flat - arc) / rc
    c, sn = math.cos(th), math.sin(th)
    return -h + rc * c, rc * sn, -c, -sn, -sn, c


@numba.njit(cache=True)
def _circle_roots(dx, dy, vx, vy, radius):
    """Both roots of ``|d + t v| = radius`` for unit ``v`` (NaN if none)."""
    b = dx * vx + dy * vy
    c = dx * dx + dy * dy - radius * radius
    disc = b * b - c
    if disc < 0.0:
        return math.nan, math.nan
    q = -(b + math.copysign(math.sqrt(disc), b))
    if q == 0.0:
        return 0.0, 0.0
    return q, c / q


@numba.njit(cache=True)
def _stadium_flight(s, phi, rc, flat):
    """Returns ``(s', phi', t, incoming, status)``."""
    px, py, nx, ny, tx, ty = _stadium_point(s, rc, flat)
    cph, sph = math.cos(phi), math.sin(phi)
    vx = cph * nx + sph * tx
    vy = cph * ny + sph * ty
    h = 0.5 * flat
    arc = math.pi * rc
    best = math.inf
    comp = -1
    if flat > 0.0:
        if vy < 0.0:
            t = (-rc - py) / vy
            x = px + t * vx
            if t > MIN_FLIGHT and t < best and -h <= x <= h:
                best, comp = t, 0
        if vy > 0.0:
            t = (rc - py) / vy
            x = px + t * vx
            if t > MIN_FLIGHT and t < best and -h <= x <= h:
                best, comp = t, 2
    for side in (1, 3):
        cx = h if side == 1 else -h
        r1, r2 = _circle_roots(px - cx, py, vx, vy, rc)
        for t in (r1, r2):
            if t > MIN_FLIGHT and t < best:
                x = px + t * vx
                if (side == 1 and x >= h) or (side == 3 and x <= -h):
                    best, comp = t, side
    if comp < 0:
        return s, phi, math.inf, 0.0, LOST
    hx = px + best * vx
    hy = py + best * vy
    if comp == 0:
        s1 = hx + h
    elif comp == 1:
        s1 = flat + (math.atan2(hy, hx - h) + _HALF_PI) * rc
    elif comp == 2:
        s1 = flat + arc + (h - hx)
    else:
        th = math.atan2(hy, hx + h)
        if th < 0.0:
            th += 2.0 * math.pi
        s1 = 2.0 * flat + arc + (th - _HALF_PI) * rc
    total = 2.0 * flat + 2.0 * arc
    s1 = s1 % total
    _, _, mx, my, ux, uy = _stadium_point(s1, rc, flat)
    dot = vx * mx + vy * my
    incoming = math.atan2(vx * ux + vy * uy, -dot)
    wx = vx - 2.0 * dot * mx
    wy = vy - 2.0 * dot * my
    phi1 = math.atan2(wx * ux + wy * uy, wx * mx + wy * my)
    status = TANGENT if abs(phi1) > _HALF_PI - TANGENCY_GUARD else OK
    return s1, phi1, best, incoming, status


# -- Lorentz kernels -----------------------------------------------------------


@numba.njit(cache=True)
def _lorentz_point(s, cx, cy, rho, offsets):
    k = 0
    while k < len(rho) - 1 and s >= offsets[k + 1]:
        k += 1
    th = (s - offsets[k]) / rho[k]
    c, sn = math.cos(th), math.sin(th)
    return cx[k] + rho[k] * c, cy[k] + rho[k] * sn, c, sn, -sn, c, k


@numba.njit(cache=True)
def _lorentz_flight(s, phi, cx, cy, rho, offsets):
    px, py, nx, ny, tx, ty, _ = _lorentz_point(s, cx, cy, rho, offsets)
    cph, sph = math.cos(phi), math.sin(phi)
    vx = cph * nx + sph * tx
    vy = cph * ny + sph * ty
    i = math.floor(px)
    j = math.floor(py)
    step_i = 1 if vx > 0 else -1
    step_j = 1 if vy > 0 else -1
    if vx > 0:
        tmax_x = (i + 1 - px) / vx
    elif vx < 0:
        tmax_x = (i - px) / vx
    else:
        tmax_x = math.inf
    if vy > 0:
        tmax_y = (j + 1 - py) / vy
    elif vy < 0:
        tmax_y = (j - py) / vy
    else:
        tmax_y = math.inf
    dtx = abs(1.0 / vx) if vx != 0 else math.inf
    dty = abs(1.0 / vy) if vy != 0 else math.inf
    best = math.inf
    hit_k = -1
    hit_cx = 0.0
    hit_cy = 0.0
    for _ in range(MAX_CELLS):
        for di in range(-1, 2):
            for dj in range(-1, 2):
                for k in range(len(rho)):
                    ccx = cx[k] + i + di
                    ccy = cy[k] + j + dj
                    dx = px - ccx
                    dy = py - ccy
                    b = dx * vx + dy * vy
                    if b >= 0.0:
                        continue
                    c = dx * dx + dy * dy - rho[k] * rho[k]
                    disc = b * b - c
                    if disc < 0.0:
                        continue
                    t = c / (-b + math.sqrt(disc))
                    if t > MIN_FLIGHT and t < best:
                        best, hit_k, hit_cx, hit_cy = t, k, ccx, ccy
        t_exit = min(tmax_x, tmax_y)
        if best <= t_exit:
            break
        if tmax_x < tmax_y:
            i += step_i
            tmax_x += dtx
        else:
            j += step_j
            tmax_y += dty
    if hit_k < 0:
        return s, phi, math.inf, 0.0, LOST
    rx = px + best * vx - hit_cx
    ry = py + best * vy - hit_cy
    th = math.atan2(ry, rx)
    if th < 0.0:
        th += 2.0 * math.pi
    s1 = offsets[hit_k] + rho[hit_k] * th
    if s1 >= offsets[hit_k + 1]:
        s1 = offsets[hit_k]
    _, _, mx, my, ux, uy, _ = _lorentz_point(s1, cx, cy, rho, offsets)
    dot = vx * mx + vy * my
    incoming = math.atan2(vx * ux + vy * uy, -dot)
    wx = vx - 2.0 * dot * mx
    wy = vy - 2.0 * dot * my
    phi1 = math.atan2(wx * ux + wy * uy, wx * mx + wy * my)
    status = TANGENT if abs(phi1) > _HALF_PI - TANGENCY_GUARD else OK
    return s1, phi1, best, incoming, status


@numba.njit(cache=True)
def _stadium_run(s, phi, rc, flat, n, out_s, out_phi, out_t):
    """Record ``n`` states starting with the given one; returns (status, index)."""
    for i in range(n):
        out_s[i] = s
        out_phi[i] = phi
        if i == n - 1:
            break
        s, phi, t, _, status = _stadium_flight(s, phi, rc, flat)
        out_t[i] = t
        if status != OK:
            return status, i
    return OK, n


@numba.njit(cache=True)
def _lorentz_run(s, phi, cx, cy, rho, offsets, n, out_s, out_phi, out_t):
    for i in range(n):
        out_s[i] = s
        out_phi[i] = phi
        if i == n - 1:
            break
        s, phi, t, _, status = _lorentz_flight(s, phi, cx, cy, rho, offsets)
        out_t[i] = t
        if status != OK:
            return status, i
    return OK, n


# -- public API ----------------------------------------------------------------


def boundary_point(table: TableSpec, s: float) -> tuple[np.ndarray, np.ndarray]:
    """Position and inward unit normal at arc length ``s``."""
    s = float(s) % table.perimeter
    if table.kind == "stadium":
        px, py, nx, ny, _, _ = _stadium_point(s, table.rc, table.flat)
    else:
        px, py, nx, ny, _, _, _ = _lorentz_point(s, *table.arrays())
    return np.array([px, py]), np.array([nx, ny])


def _tangent(table: TableSpec, s: float) -> np.ndarray:
    if table.kind == "stadium":
        out = _stadium_point(s, table.rc, table.flat)
    else:
        out = _lorentz_point(s, *table.arrays())
    return np.array([out[4], out[5]])


def _flight(state, table: TableSpec):
    s, phi = float(state[0]), float(state[1])
    if table.kind == "stadium":
        return _stadium_flight(s, phi, table.rc, table.flat)
    return _lorentz_flight(s, phi, *table.arrays())


def trace_flight(state, table: TableSpec) -> Flight:
    """Free flight from ``state`` to the next collision, with diagnostics."""
    s, phi = float(state[0]), float(state[1])
    if abs(phi) >= _HALF_PI - TANGENCY_GUARD:
        raise Tangency(f"initial angle {phi} is within the tangency guard")
    s1, phi1, t, incoming, status = _flight((s, phi), table)
    if status == LOST:
        raise NoIntersection(f"no boundary hit from s={s}, phi={phi}")
    if status == TANGENT:
        raise Tangency(f"grazing collision at s={s1}, phi={phi1}")
    start, _ = boundary_point(table, s)
    n0 = boundary_point(table, s)[1]
    t0 = _tangent(table, s)
    v = math.cos(phi) * n0 + math.sin(phi) * t0
    end = start + t * v
    return Flight(start, end, t, incoming, CollisionState(s1, phi1))


def billiard_step(state, table: TableSpec) -> CollisionState:
    return trace_flight(state, table).state


def reverse(state) -> CollisionState:
    return CollisionState(state[0], -state[1])


def _initial_state(table: TableSpec, rng: np.random.Generator) -> CollisionState:
    # phi has density cos(phi)/2, i.e. sin(phi) uniform on (-1, 1)
    while True:
        s = rng.random() * table.perimeter
        phi = math.asin(2.0 * rng.random() - 1.0)
        if abs(phi) < _HALF_PI - TANGENCY_GUARD:
            return CollisionState(s, phi)


def billiard_orbit(table: TableSpec, seed: int, burn_in: int = 1000, length: int = 1, return_flights: bool = False):
    """Seeded collision sequence of ``length`` states after ``burn_in`` collisions.

    Initial states follow the invariant law (``s`` uniform, ``phi`` with
    density ``cos(phi)/2``); a grazing collision or lost flight restarts the
    trajectory from a fresh draw of the same stream. Returns an array of shape
    ``(length, 2)`` holding ``(s, phi)``, plus the flight times when
    ``return_flights`` is set.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    rng = make_rng(seed)
    total = burn_in + length
    out_s = np.empty(total)
    out_phi = np.empty(total)
    out_t = np.full(total, np.nan)
    for _ in range(MAX_ESCAPES):
        s0, phi0 = _initial_state(table, rng)
        if table.kind == "stadium":
            status, _ = _stadium_run(s0, phi0, table.rc, table.flat, total, out_s, out_phi, out_t)
        else:
            status, _ = _lorentz_run(s0, phi0, *table.arrays(), total, out_s, out_phi, out_t)
        if status == OK:
            orbit = np.column_stack([out_s[burn_in:], out_phi[burn_in:]])
            if return_flights:
                return orbit, out_t[burn_in : total - 1].copy()
            return orbit
    raise SeedExhausted(f"{MAX_ESCAPES} consecutive trajectories hit a tangency")


# -- arbitrary precision reference ----------------------------------------------


def _mp_circle_roots(dx, dy, vx, vy, radius):
    b = dx * vx + dy * vy
    c = dx * dx + dy * dy - radius * radius
    disc = b * b - c
    if disc < 0:
        return []
    sq = mpmath.sqrt(disc)
    q = -(b + (sq if b >= 0 else -sq))
    if q == 0:
        return [mpmath.mpf(0)]
    return [q, c / q]


def _mp_stadium_point(s, rc, flat):
    h = flat / 2
    arc = mpmath.pi * rc
    if s < flat:
        return -h + s, -rc, 0, 1, 1, 0
    if s < flat + arc:
        th = -mpmath.pi / 2 + (s - flat) / rc
        c, sn = mpmath.cos(th), mpmath.sin(th)
        return h + rc * c, rc * sn, -c, -sn, -sn, c
    if s < 2 * flat + arc:
        return h - (s - flat - arc), rc, 0, -1, -1, 0
    th = mpmath.pi / 2 + (s - 2 * flat - arc) / rc
    c, sn = mpmath.cos(th), mpmath.sin(th)
    return -h + rc * c, rc * sn, -c, -sn, -sn, c


def _mp_lorentz_point(s, scatterers, offsets):
    k = 0
    while k < len(scatterers) - 1 and s >= offsets[k + 1]:
        k += 1
    cx, cy, rho = scatterers[k]
    th = (s - offsets[k]) / rho
    c, sn = mpmath.cos(th), mpmath.sin(th)
    return cx + rho * c, cy + rho * sn, c, sn, -sn, c


def _mp_reflect(vx, vy, point):
    _, _, mx, my, ux, uy = point
    dot = vx * mx + vy * my
    wx, wy = vx - 2 * dot * mx, vy - 2 * dot * my
    return mpmath.atan2(wx * ux + wy * uy, wx * mx + wy * my)


def _mp_stadium_step(s, phi, rc, flat):
    px, py, nx, ny, tx, ty = _mp_stadium_point(s, rc, flat)
    vx = mpmath.cos(phi) * nx + mpmath.sin(phi) * tx
    vy = mpmath.cos(phi) * ny + mpmath.sin(phi) * ty
    h, arc = flat / 2, mpmath.pi * rc
    tmin = mpmath.mpf(MIN_FLIGHT)
    best, comp = None, -1
    if flat > 0:
        for wall, target, sign in ((0, -rc, -1), (2, rc, 1)):
            if sign * vy > 0:
                t = (target - py) / vy
                x = px + t * vx
                if t > tmin and -h <= x <= h and (best is None or t < best):
                    best, comp = t, wall
    for side, cx in ((1, h), (3, -h)):
        for t in _mp_circle_roots(px - cx, py, vx, vy, rc):
            if t > tmin and (best is None or t < best):
                x = px + t * vx
                if (side == 1 and x >= h) or (side == 3 and x <= -h):
                    best, comp = t, side
    if comp < 0:
        raise NoIntersection("no boundary hit")
    hx, hy = px + best * vx, py + best * vy
    if comp == 0:
        s1 = hx + h
    elif comp == 1:
        s1 = flat + (mpmath.atan2(hy, hx - h) + mpmath.pi / 2) * rc
    elif comp == 2:
        s1 = flat + arc + (h - hx)
    else:
        th = mpmath.atan2(hy, hx + h)
        if th < 0:
            th += 2 * mpmath.pi
        s1 = 2 * flat + arc + (th - mpmath.pi / 2) * rc
    s1 = s1 % (2 * flat + 2 * arc)
    return s1, _mp_reflect(vx, vy, _mp_stadium_point(s1, rc, flat))


def _mp_lorentz_step(s, phi, scatterers, offsets):
    px, py, nx, ny, tx, ty = _mp_lorentz_point(s, scatterers, offsets)
    vx = mpmath.cos(phi) * nx + mpmath.sin(phi) * tx
    vy = mpmath.cos(phi) * ny + mpmath.sin(phi) * ty
    i, j = int(mpmath.floor(px)), int(mpmath.floor(py))
    step_i = 1 if vx > 0 else -1
    step_j = 1 if vy > 0 else -1
    inf = mpmath.inf
    tmax_x = ((i + 1 - px) / vx) if vx > 0 else ((i - px) / vx if vx < 0 else inf)
    tmax_y = ((j + 1 - py) / vy) if vy > 0 else ((j - py) / vy if vy < 0 else inf)
    dtx = abs(1 / vx) if vx != 0 else inf
    dty = abs(1 / vy) if vy != 0 else inf
    tmin = mpmath.mpf(MIN_FLIGHT)
    best, hit = inf, None
    for _ in range(MAX_CELLS):
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                for k, (cx, cy, rho) in enumerate(scatterers):
                    ccx, ccy = cx + i + di, cy + j + dj
                    dx, dy = px - ccx, py - ccy
                    b = dx * vx + dy * vy
                    if b >= 0:
                        continue
                    c = dx * dx + dy * dy - rho * rho
                    disc = b * b - c
                    if disc < 0:
                        continue
                    t = c / (-b + mpmath.sqrt(disc))
                    if tmin < t < best:
                        best, hit = t, (k, ccx, ccy)
        if best <= min(tmax_x, tmax_y):
            break
        if tmax_x < tmax_y:
            i += step_i
            tmax_x += dtx
        else:
            j += step_j
            tmax_y += dty
    if hit is None:
        raise NoIntersection("no boundary hit")
    k, ccx, ccy = hit
    th = mpmath.atan2(py + best * vy - ccy, px + best * vx - ccx)
    if th < 0:
        th += 2 * mpmath.pi
    s1 = offsets[k] + scatterers[k][2] * th
    return s1, _mp_reflect(vx, vy, _mp_lorentz_point(s1, scatterers, offsets))


def billiard_step_precise(state, table: TableSpec, steps: int = 1, dps: int = 60) -> CollisionState:
    """Apply ``steps`` collisions in ``dps``-digit arithmetic.

    ``state`` entries may be floats or mpmath numbers; the result holds mpmath
    numbers so repeated calls keep full precision.
    """
    with mpmath.workdps(dps):
        s, phi = mpmath.mpf(state[0]), mpmath.mpf(state[1])
        guard = mpmath.pi / 2 - mpmath.mpf(TANGENCY_GUARD)
        if table.kind == "stadium":
            rc, flat = mpmath.mpf(table.rc), mpmath.mpf(table.flat)
            step = lambda a, b: _mp_stadium_step(a, b, rc, flat)  # noqa: E731
        else:
            sc = [tuple(mpmath.mpf(v) for v in d) for d in table.scatterers]
            offsets = [mpmath.mpf(0)]
            for _, _, rho in sc:
                offsets.append(offsets[-1] + 2 * mpmath.pi * rho)
            step = lambda a, b: _mp_lorentz_step(a, b, sc, offsets)  # noqa: E731
        for _ in range(steps):
            s, phi = step(s, phi)
            if abs(phi) > guard:
                raise Tangency(f"grazing collision at s={s}")
        return CollisionState(+s, +phi)


def reversal_error(state, table: TableSpec, steps: int = 100, dps: int | None = None) -> float:
    """Distance between ``state`` and the result of ``steps`` collisions forward,
    a velocity flip, and ``steps`` collisions back, all at ``dps`` digits.

    The flip ``(s, phi) -> (s, -phi)`` conjugates the map to its inverse, so a
    return to ``(s, -phi)`` is expected; the error is reported on that basis.
    Dispersing tables lose up to ~1.5 digits per collision, so the default
    precision grows with ``steps``.
    """
    if dps is None:
        dps = 30 + 2 * steps
    with mpmath.workdps(dps):
        s0, phi0 = mpmath.mpf(state[0]), mpmath.mpf(state[1])
        fwd = billiard_step_precise((s0, phi0), table, steps, dps)
        back = billiard_step_precise((fwd.s, -fwd.phi), table, steps, dps)
        ds = abs(back.s - s0) % table.perimeter
        ds = min(ds, table.perimeter - ds)
        return float(max(ds, abs(back.phi + phi0)))


# -- horizon ---------------------------------------------------------------------


def free_path_bruteforce(table: TableSpec, x: float, y: float, angle: float, reach: int = 6) -> float:
    """First positive hit time of a ray against every disk image in a box.

    Independent of the cell traversal used by the kernels; only for Lorentz
    tables and rays starting outside every disk.
    """
    vx, vy = math.cos(angle), math.sin(angle)
    best = math.inf
    ci, cj = math.floor(x), math.floor(y)
    for di in range(-reach, reach + 1):
        for dj in range(-reach, reach + 1):
            for cx, cy, rho in table.scatterers:
                dx = x - (cx + ci + di)
                dy = y - (cy + cj + dj)
                b = dx * vx + dy * vy
                c = dx * dx + dy * dy - rho * rho
                disc = b * b - c
                if disc >= 0:
                    t = -b - math.sqrt(disc)
                    if t > MIN_FLIGHT:
                        best = min(best, t)
    return best


def horizon_estimate(table: TableSpec, n_angles: int = 720, n_starts: int = 64) -> float:
    """Largest free path found by scanning rays from scatterer surfaces.

    Rays leave ``n_starts`` points on each scatterer in ``n_angles`` outward
    directions. Returns ``inf`` when some ray escapes the brute-force box.
    """
    if table.kind != "lorentz":
        raise ValueError("horizon is defined for Lorentz tables")
    longest = 0.0
    for cx, cy, rho in table.scatterers:
        for a in np.linspace(0, 2 * math.pi, n_starts, endpoint=False):
            x = cx + rho * math.cos(a) * (1 + 1e-9)
            y = cy + rho * math.sin(a) * (1 + 1e-9)
            for psi in np.linspace(-_HALF_PI, _HALF_PI, n_angles + 2)[1:-1]:
                t = free_path_bruteforce(table, x, y, a + psi)
                longest = max(longest, t)
    return longest
