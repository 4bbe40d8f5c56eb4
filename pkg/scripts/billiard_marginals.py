"""Check the invariant marginals and free-flight statistics of the billiard tables."""

import argparse

import numpy as np
from scipy import stats

from hitstats.billiards import TableSpec, billiard_orbit, horizon_estimate

TABLES = {
    "stadium": TableSpec.stadium,
    "lorentz_single": TableSpec.lorentz_single,
    "lorentz_finite_horizon": TableSpec.lorentz_finite_horizon,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--collisions", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=20240611)
    args = ap.parse_args()

    for name, make in TABLES.items():
        table = make()
        orbit, flights = billiard_orbit(table, args.seed, length=args.collisions, return_flights=True)
        ks_phi = stats.kstest(np.sin(orbit[:, 1]), "uniform", args=(-1, 2)).statistic
        ks_s = stats.kstest(orbit[:, 0] / table.perimeter, "uniform").statistic
        # mean free path of the collision map is pi |Q| / |boundary|
        area = 2 * table.rc * table.flat + np.pi * table.rc**2 if table.kind == "stadium" else 1 - np.pi * sum(
            rho**2 for *_, rho in table.scatterers
        )
        mfp = np.pi * area / table.perimeter
        horizon = horizon_estimate(table, n_angles=180, n_starts=32) if table.kind == "lorentz" else np.nan
        print(
            f"{name:24s} KS(sin phi) {ks_phi:.4f}  KS(s) {ks_s:.4f}  "
            f"mean flight {flights.mean():.4f} (theory {mfp:.4f})  max flight {flights.max():.3f}  horizon {horizon:.3f}"
        )


if __name__ == "__main__":
    main()
