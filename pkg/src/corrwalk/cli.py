"""Command-line interface exposing every computation as a subcommand.

Subcommands: dist, cf, moment, symmetry, absorb, limit, simulate.  Output
is CSV (default) or JSON, written to stdout or to --out; both formats
carry a full parameter echo so any run can be reproduced exactly, and both
serialize the same numbers.  Exit codes: 0 success, 2 invalid flags or
domain errors, 3 budget exceeded, 4 non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import absorption, exact, limits, montecarlo, spectral
from .errors import BudgetExceededError, CorrwalkError, NonConvergenceError
from .params import InitialDistribution, WalkParameters

SCHEMA_VERSION = "1"

SYMMETRY_HORIZON = 20

CDF_GRID_POINTS = 41


@dataclass
class Report:
    """One command's output: parameter echo plus a column-oriented table."""

    command: str
    params: dict
    columns: list
    rows: list
    extras: dict = field(default_factory=dict)


def _fmt_scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _render_csv(report: Report) -> str:
    lines = [f"# corrwalk {report.command}", f"# schema_version = {SCHEMA_VERSION}"]
    for key, value in report.params.items():
        lines.append(f"# {key} = {_fmt_scalar(value)}")
    for key, value in report.extras.items():
        lines.append(f"# {key} = {_fmt_scalar(value)}")
    lines.append(",".join(report.columns))
    for row in report.rows:
        lines.append(",".join(_fmt_scalar(v) for v in row))
    return "\n".join(lines) + "\n"


def _render_json(report: Report) -> str:
    document = {
        "schema_version": SCHEMA_VERSION,
        "command": report.command,
        "params": report.params,
        "payload": {"columns": report.columns, "rows": [list(r) for r in report.rows]},
        "extras": report.extras,
    }
    return json.dumps(document, indent=2) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _build_params(args) -> WalkParameters:
    _require(args.a is not None and args.d is not None, "--a and --d are required")
    return WalkParameters(args.a, args.d)


def _build_phi(args, default_alpha: float = None) -> InitialDistribution:
    alpha = args.alpha if args.alpha is not None else default_alpha
    _require(alpha is not None, "--alpha is required")
    return InitialDistribution(alpha)


def _parse_boundary(raw: str):
    """'inf' -> None (half line), otherwise an integer site count."""
    if raw.strip().lower() == "inf":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"--N must be an integer >= 2 or 'inf', got {raw!r}") from None


def _band_check(count: int, n_samples: int, p: float) -> bool:
    expected = n_samples * p
    sigma = math.sqrt(n_samples * p * (1.0 - p))
    return abs(count - expected) <= 4.0 * sigma


def _cmd_dist(args) -> Report:
    params = _build_params(args)
    phi = _build_phi(args)
    dist = exact.distribution(args.n, params, phi)
    echo = {
        "a": params.a,
        "d": params.d,
        "alpha": phi.alpha,
        "beta": phi.beta,
        "n": args.n,
        "oracle": bool(args.oracle),
    }
    if args.oracle:
        oracle = exact.distribution_bruteforce(args.n, params, phi)
        deviations = np.abs(dist.probabilities - oracle.probabilities)
        columns = ["position", "probability", "bruteforce_probability", "abs_deviation"]
        rows = [
            (int(p_), float(x), float(y), float(e))
            for p_, x, y, e in zip(
                dist.positions, dist.probabilities, oracle.probabilities, deviations
            )
        ]
        extras = {"max_abs_deviation": float(deviations.max())}
    else:
        columns = ["position", "probability"]
        rows = [(int(p_), float(x)) for p_, x in zip(dist.positions, dist.probabilities)]
        extras = {}
    return Report("dist", echo, columns, rows, extras)


def _cmd_cf(args) -> Report:
    params = _build_params(args)
    phi = _build_phi(args)
    _require(args.points >= 2, "--points must be at least 2")
    angles = np.linspace(-math.pi, math.pi, args.points)
    if args.points % 2 == 1:
        angles[args.points // 2] = 0.0
    echo = {
        "a": params.a,
        "d": params.d,
        "alpha": phi.alpha,
        "beta": phi.beta,
        "n": args.n,
        "points": args.points,
    }
    rows = []
    for angle in angles:
        value = spectral.characteristic_function(args.n, float(angle), params, phi)
        rows.append((float(angle), value.real, value.imag, abs(value)))
    return Report("cf", echo, ["xi", "real", "imag", "modulus"], rows)


def _cmd_moment(args) -> Report:
    params = _build_params(args)
    phi = _build_phi(args)
    value = spectral.moment(args.n, args.m, params, phi)
    echo = {
        "a": params.a,
        "d": params.d,
        "alpha": phi.alpha,
        "beta": phi.beta,
        "n": args.n,
        "m": args.m,
    }
    return Report("moment", echo, ["order", "value"], [(args.m, value)])


def _cmd_symmetry(args) -> Report:
    params = _build_params(args)
    phi = _build_phi(args)
    closed = spectral.is_symmetric_closed_form(params, phi)
    empirical = spectral.is_symmetric(params, phi, horizon=SYMMETRY_HORIZON)
    echo = {
        "a": params.a,
        "d": params.d,
        "alpha": phi.alpha,
        "beta": phi.beta,
        "horizon": SYMMETRY_HORIZON,
    }
    verdict = lambda flag: "symmetric" if flag else "asymmetric"  # noqa: E731
    rows = [("closed_form", verdict(closed)), ("empirical", verdict(empirical))]
    return Report("symmetry", echo, ["method", "verdict"], rows, {"agree": closed == empirical})


def _exact_absorption(params, phi, n_sites, start, tolerance=1e-8):
    if n_sites is None:
        return absorption.absorb_infinite(params, phi, start, tolerance=tolerance)
    if params.a == params.d:
        return absorption.absorb_closed_form(n_sites, start, params, phi)
    return absorption.absorb_linear_system(n_sites, params, phi, start)


def _cmd_absorb(args) -> Report:
    params = _build_params(args)
    phi = _build_phi(args)
    n_sites = _parse_boundary(args.N)
    echo = {
        "a": params.a,
        "d": params.d,
        "alpha": phi.alpha,
        "beta": phi.beta,
        "N": "inf" if n_sites is None else n_sites,
        "all": bool(args.all),
        "tol": args.tol,
    }
    columns = ["start", "prob_hit_0", "method"]
    if n_sites is None:
        _require(not args.all, "--all requires a finite --N")
        _require(args.k is not None, "--k is required")
        echo["k"] = args.k
        result = absorption.absorb_infinite(params, phi, args.k, tolerance=args.tol)
        rows = [(result.start, result.prob_hit_0, result.method)]
        extras = {
            "n_sites_final": result.diagnostics["n_sites_final"],
            "lambda_plus": result.diagnostics["lambda_plus"],
            "geometric_benchmark": result.diagnostics["geometric_benchmark"],
        }
        return Report("absorb", echo, columns, rows, extras)
    if args.all:
        starts = range(n_sites + 1)
    else:
        _require(args.k is not None, "--k is required unless --all is given")
        echo["k"] = args.k
        starts = [args.k]
    rows = []
    for k in starts:
        result = _exact_absorption(params, phi, n_sites, k)
        rows.append((result.start, result.prob_hit_0, result.method))
    return Report("absorb", echo, columns, rows)


def _cmd_limit(args) -> Report:
    _require(
        bool(args.variance) != (args.theta is not None),
        "exactly one of --variance or --theta is required",
    )
    if args.variance:
        _require(args.a is not None, "--a is required with --variance")
        d = args.d if args.d is not None else args.a
        params = WalkParameters(args.a, d)
        value = limits.diffusive_variance(params)
        echo = {"a": params.a, "d": params.d, "variance_mode": True}
        return Report("limit", echo, ["a", "variance"], [(params.a, value)])
    phi = _build_phi(args, default_alpha=0.5)
    law = limits.MixedLimitLaw(args.theta, phi)
    extras = {
        "atom_minus1": law.atom_minus1,
        "atom_plus1": law.atom_plus1,
        "continuous_mass": law.continuous_mass(),
    }
    extras["total_mass"] = extras["atom_minus1"] + extras["atom_plus1"] + extras["continuous_mass"]
    if args.compare_n is not None:
        n = args.compare_n
        echo = {
            "theta": args.theta,
            "alpha": phi.alpha,
            "beta": phi.beta,
            "compare_n": n,
        }
        a_n = 1.0 - args.theta / n
        dist = exact.distribution(n, WalkParameters(a_n, a_n), phi)
        rows = []
        sup_gap = 0.0
        for t in np.linspace(-1.0, 1.0, CDF_GRID_POINTS):
            exact_cdf = dist.cdf(t * n + 1e-9)
            limit_cdf = law.cdf(float(t))
            gap = abs(exact_cdf - limit_cdf)
            sup_gap = max(sup_gap, gap)
            rows.append((float(t), exact_cdf, limit_cdf, gap))
        extras["sup_gap"] = sup_gap
        extras["a_n"] = a_n
        columns = ["t", "exact_cdf", "limit_cdf", "abs_gap"]
        return Report("limit", echo, columns, rows, extras)
    _require(args.x_points >= 1, "--x-points must be at least 1")
    echo = {
        "theta": args.theta,
        "alpha": phi.alpha,
        "beta": phi.beta,
        "x_points": args.x_points,
    }
    rows = []
    for j in range(args.x_points):
        x = ((j + 1) / (args.x_points + 1)) * 2.0 - 1.0
        rows.append((x, law.density(x)))
    return Report("limit", echo, ["x", "density"], rows, extras)


def _cmd_simulate(args) -> Report:
    params = _build_params(args)
    phi = _build_phi(args)
    echo = {
        "a": params.a,
        "d": params.d,
        "alpha": phi.alpha,
        "beta": phi.beta,
        "steps": args.steps,
        "samples": args.samples,
        "seed": args.seed,
        "against_exact": bool(args.against_exact),
    }
    if args.N is not None or args.k is not None:
        _require(
            args.N is not None and args.k is not None,
            "absorption simulation needs both --N and --k",
        )
        n_sites = _parse_boundary(args.N)
        echo["N"] = "inf" if n_sites is None else n_sites
        echo["k"] = args.k
        config = montecarlo.SimulationConfig(
            params,
            phi,
            n_steps=args.steps,
            n_samples=args.samples,
            seed=args.seed,
            boundary=absorption.BoundarySpec(n_sites),
            start=args.k,
        )
        stats = montecarlo.simulate_absorption(config)
        rows = sorted(stats.histogram.items())
        extras = {
            "mean": stats.mean,
            "variance": stats.variance,
            "absorbed_at_0": stats.absorbed_at_0,
            "absorbed_at_boundary": stats.absorbed_at_boundary,
            "censored": stats.censored,
            "absorbed_at_0_fraction": stats.absorbed_at_0_fraction,
        }
        if args.against_exact:
            exact_prob = _exact_absorption(params, phi, n_sites, args.k).prob_hit_0
            extras["exact_prob_hit_0"] = exact_prob
            extras["within_4sigma"] = _band_check(
                stats.absorbed_at_0, stats.n_samples, exact_prob
            )
        return Report("simulate", echo, ["position", "count"], rows, extras)
    config = montecarlo.SimulationConfig(
        params, phi, n_steps=args.steps, n_samples=args.samples, seed=args.seed
    )
    stats = montecarlo.simulate_walk(config)
    extras = {
        "mean": stats.mean,
        "variance": stats.variance,
        "variance_per_step": stats.variance / args.steps,
    }
    if args.against_exact:
        dist = exact.distribution(args.steps, params, phi)
        columns = ["position", "count", "empirical_fraction", "exact_probability", "within_4sigma"]
        rows = []
        all_pass = True
        for position, probability in zip(dist.positions, dist.probabilities):
            count = stats.histogram[int(position)]
            ok = _band_check(count, stats.n_samples, float(probability))
            all_pass = all_pass and ok
            rows.append(
                (
                    int(position),
                    count,
                    count / stats.n_samples,
                    float(probability),
                    ok,
                )
            )
        extras["all_bands_pass"] = all_pass
        return Report("simulate", echo, columns, rows, extras)
    rows = sorted(stats.histogram.items())
    return Report("simulate", echo, ["position", "count"], rows, extras)


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--a", type=float, default=None, help="left-step persistence, in (0,1)")
    sub.add_argument("--d", type=float, default=None, help="right-step persistence, in (0,1)")
    sub.add_argument(
        "--alpha",
        type=float,
        default=None,
        help="initial left-chirality weight in [0,1]; beta is always 1-alpha",
    )
    sub.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    sub.add_argument("--out", default=None, help="output file path (stdout when omitted)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corrwalk",
        description="Exact laws, limits, absorption, and simulation of 1-D correlated walks",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("dist", help="exact n-step position law")
    _add_common_flags(p)
    p.add_argument("--n", type=int, required=True, help="number of steps (>= 1)")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="add brute-force enumeration columns (needs n <= 22)",
    )
    p.set_defaults(handler=_cmd_dist)

    p = subparsers.add_parser("cf", help="characteristic function on an angle grid")
    _add_common_flags(p)
    p.add_argument("--n", type=int, required=True, help="number of steps (>= 1)")
    p.add_argument("--points", type=int, default=41, help="grid size over [-pi, pi]")
    p.set_defaults(handler=_cmd_cf)

    p = subparsers.add_parser("moment", help="exact integer moment of the position")
    _add_common_flags(p)
    p.add_argument("--n", type=int, required=True, help="number of steps (>= 1)")
    p.add_argument("--m", type=int, required=True, help="moment order (>= 1)")
    p.set_defaults(handler=_cmd_moment)

    p = subparsers.add_parser("symmetry", help="symmetry classification of the law")
    _add_common_flags(p)
    p.set_defaults(handler=_cmd_symmetry)

    p = subparsers.add_parser("absorb", help="absorption probability at site 0")
    _add_common_flags(p)
    p.add_argument("--N", type=str, required=True, help="far boundary site (integer >= 2) or 'inf'")
    p.add_argument("--k", type=int, default=None, help="start site")
    p.add_argument("--all", action="store_true", help="emit every start site 0..N")
    p.add_argument("--tol", type=float, default=1e-8, help="convergence tolerance for --N inf")
    p.set_defaults(handler=_cmd_absorb)

    p = subparsers.add_parser("limit", help="limit laws: mixed Bessel law or diffusive variance")
    _add_common_flags(p)
    p.add_argument("--theta", type=float, default=None, help="ballistic-scaling parameter in (0,1)")
    p.add_argument("--x-points", dest="x_points", type=int, default=101, help="density sample count")
    p.add_argument(
        "--compare-n",
        dest="compare_n",
        type=int,
        default=None,
        help="compare the exact rescaled n-step CDF against the limit CDF",
    )
    p.add_argument("--variance", action="store_true", help="report the diffusive variance a/(1-a)")
    p.set_defaults(handler=_cmd_limit)

    p = subparsers.add_parser("simulate", help="seeded Monte Carlo simulation")
    _add_common_flags(p)
    p.add_argument("--steps", type=int, required=True, help="steps per trajectory (or budget)")
    p.add_argument("--samples", type=int, required=True, help="number of trajectories")
    p.add_argument("--seed", type=int, required=True, help="RNG seed (required; runs are deterministic)")
    p.add_argument("--N", type=str, default=None, help="absorption mode: far boundary or 'inf'")
    p.add_argument("--k", type=int, default=None, help="absorption mode: start site")
    p.add_argument(
        "--against-exact",
        dest="against_exact",
        action="store_true",
        help="append exact-law comparison columns and band verdicts",
    )
    p.set_defaults(handler=_cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        report = args.handler(args)
        text = _render_csv(report) if args.format == "csv" else _render_json(report)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (CorrwalkError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out is not None:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
