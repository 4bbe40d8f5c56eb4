"""Command line entry point (``hitstats`` or ``python -m hitstats``).

Exit codes: 0 success, 1 invalid input, 2 selftest failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import bounds
from .billiards import TableSpec, trace_flight
from .errors import HitStatsError, Infeasible
from .harness import (
    ExperimentConfig,
    fit_rate,
    orbit_for,
    read_results,
    run_experiment,
    selftest,
    system_from_dict,
    tomllib,
    write_results,
)

DEFAULT_SEED = 20240611


def _add_overrides(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trials", type=int)
    p.add_argument("--horizon", type=float)
    p.add_argument("--orbit-length", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--center", action="append", help="explicit center, comma-separated coordinates")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hitstats", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, help="master seed (overrides the config file)")
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    parser.add_argument("--workers", type=int, help="worker processes (output does not depend on it)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="dump an orbit (or billiard flight segments) as CSV")
    p.add_argument("system", help="system kind, e.g. doubling, henon, stadium, lorentz")
    p.add_argument("--length", type=int, default=1000)
    p.add_argument("--burn-in", type=int, default=1000)
    p.add_argument("--param", action="append", default=[], help="key=value system parameter")
    p.add_argument("--segments", action="store_true", help="billiards: write x,y endpoints per flight")

    p = sub.add_parser("hit-stats", help="run one experiment config")
    p.add_argument("config", type=Path)
    _add_overrides(p)

    p = sub.add_parser("sweep", help="run several experiment configs")
    p.add_argument("configs", type=Path, nargs="+")
    _add_overrides(p)

    p = sub.add_parser("rates", help="evaluate the rate exponent")
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--dim-h", type=float, required=True)
    p.add_argument("--dim-u", type=float, required=True)
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--b", type=float, help="partition regularity exponent (selects the b variant)")
    p.add_argument("--density", action="store_true", help="measure has a Lebesgue density")
    p.add_argument("--optimize", action="store_true", help="maximise over epsilon")

    p = sub.add_parser("fit", help="fit log(statistic) against log(r) from a results CSV")
    p.add_argument("csv", type=Path)
    p.add_argument("--statistic", default="tv_counts")

    sub.add_parser("selftest", help="run the exact-arithmetic self-test suites")
    return parser


def _parse_value(v: str):
    for cast in (int, float):
        try:
            return cast(v)
        except ValueError:
            pass
    return v


def _config(path: Path, args) -> ExperimentConfig:
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    centers = None
    if args.center:
        centers = [tuple(float(c) for c in s.split(",")) for s in args.center]
    return ExperimentConfig.from_dict(
        data,
        master_seed=args.seed,
        workers=args.workers,
        trials=args.trials,
        horizon=args.horizon,
        orbit_length=args.orbit_length,
        epsilon=args.epsilon,
        explicit_centers=centers,
    )


def _run(config: ExperimentConfig, out: Path, name: str) -> Path:
    rows = run_experiment(config, progress=lambda m: print(m, file=sys.stderr))
    path = write_results(rows, out / f"{name}.csv", config)
    print(path)
    return path


def cmd_simulate(args) -> int:
    params = dict(kv.split("=", 1) for kv in args.param)
    system = system_from_dict({"kind": args.system, **{k: _parse_value(v) for k, v in params.items()}})
    seed = DEFAULT_SEED if args.seed is None else args.seed
    orbit = orbit_for(system, seed, args.burn_in, args.length)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    if args.segments:
        if not isinstance(system, TableSpec):
            raise ValueError("--segments needs a billiard table")
        path = args.out_dir / f"segments_{system.name}.csv"
        header = ["x0", "y0", "x1", "y1"]
        flights = (trace_flight(state, system) for state in orbit[:-1])
        records = ((*f.start, *f.end) for f in flights)
    else:
        path = args.out_dir / f"orbit_{system.name}.csv"
        if isinstance(system, TableSpec):
            header = ["s", "phi"]
        else:
            header = {1: ["x"], 2: ["x", "y"], 3: ["x", "re_z", "im_z"]}[orbit.shape[1]]
        records = orbit
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows([format(v, ".17g") for v in rec] for rec in records)
    print(path)
    return 0


def cmd_hit_stats(args) -> int:
    config = _config(args.config, args)
    _run(config, args.out_dir, args.config.stem)
    return 0


def cmd_sweep(args) -> int:
    configs = [(path, _config(path, args)) for path in args.configs]
    for path, config in configs:
        _run(config, args.out_dir, path.stem)
    return 0


def cmd_rates(args) -> int:
    inputs = bounds.RateInputs(
        args.xi, args.alpha, args.dim_h, args.dim_u, args.epsilon, b=args.b, lebesgue_density=args.density
    )
    use_b = args.b is not None
    out = {}
    if args.optimize:
        try:
            eps, result = bounds.optimize_epsilon(inputs, use_b=use_b)
            out["epsilon"] = eps
        except Infeasible as exc:
            result = exc.result
    else:
        result = bounds.evaluate_rate(inputs, use_b=use_b)
    out.update(result.to_dict())
    print(_rate_table(out))
    print(json.dumps(out, indent=2, default=_json_number))
    return 0


def _rate_table(out: dict) -> str:
    lines = [f"{'feasible':<22}{out['feasible']}"]
    if "epsilon" in out:
        lines.append(f"{'epsilon':<22}{out['epsilon']:.6g}")
    if out["feasible"]:
        lines.append(f"{'exponent_a':<22}{out['exponent_a']:.6g}  ({out['binding_term']})")
    lines.append("branches")
    lines += [f"  {k:<20}{v:.6g}" for k, v in out["branches"].items()]
    lines.append("constraint margins")
    lines += [f"  {k:<20}{v:+.6g}" for k, v in out["constraint_report"].items()]
    lines += [f"note: {n}" for n in out["notes"]]
    return "\n".join(lines)


def _json_number(x):
    if isinstance(x, (np.floating, float)) and not math.isfinite(x):
        return str(x)
    return float(x)


def cmd_fit(args) -> int:
    rows = read_results(args.csv)
    groups: dict[tuple, list] = {}
    for row in rows:
        groups.setdefault((row.system, row.z_id), []).append(row)
    for (system, zid), group in groups.items():
        try:
            fit = fit_rate(group, args.statistic)
            note = f" excluded r={fit.excluded}" if fit.excluded else ""
            print(f"{system} z{zid} {args.statistic}: slope {fit.slope:.4f} +- {fit.stderr:.4f}{note}")
        except HitStatsError as exc:
            print(f"{system} z{zid} {args.statistic}: {exc}")
    return 0


def cmd_selftest(args) -> int:
    return 0 if all(selftest().values()) else 2


COMMANDS = {
    "simulate": cmd_simulate,
    "hit-stats": cmd_hit_stats,
    "sweep": cmd_sweep,
    "rates": cmd_rates,
    "fit": cmd_fit,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, OSError, tomllib.TOMLDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
