"""Estimate local dimensions from long orbits and compare with known values."""

import argparse
import math

import numpy as np

from hitstats.harness import metric_for, orbit_for
from hitstats.measure import DistanceProfile, local_dimension
from hitstats.systems import Kind, SystemSpec

CASES = [
    (SystemSpec(Kind.DOUBLING), 1.0),
    (SystemSpec(Kind.LSV, gamma=0.3), 1.0),
    (SystemSpec(Kind.SMALE_SOLENOID, theta=0.1), 1 + math.log(2) / math.log(10)),
    (SystemSpec(Kind.SMALE_SOLENOID, theta=0.25), 1 + math.log(2) / math.log(4)),
    (SystemSpec(Kind.HENON), math.nan),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=10_000_000)
    ap.add_argument("--centers", type=int, default=5)
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()
    radii = 2.0 ** -np.arange(4, 10)
    rng = np.random.default_rng(args.seed)
    for system, expected in CASES:
        orbit = orbit_for(system, args.seed, 1000, args.samples)
        slopes = []
        for idx in rng.integers(0, len(orbit), args.centers):
            z = orbit[idx] if orbit.ndim == 1 else tuple(orbit[idx])
            prof = DistanceProfile.from_orbit(orbit, z, metric_for(system))
            slopes.append(local_dimension(radii, [prof.count_within(r) / len(prof) for r in radii])[0])
        print(f"{system.kind.value:22s} mean slope {np.mean(slopes):.4f} (spread {np.std(slopes):.4f})  expected {expected:.4f}")


if __name__ == "__main__":
    main()
