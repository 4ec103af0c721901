"""Command-line interface.

Subcommands:

    coeffs      dump a coefficient table as CSV ``k,value``
    solve       run one method under one config
    compare     run the requested methods and report pairwise distances
    table1      reproduce the pairwise error table on the c-nonzero preset
    c0-suite    run the zero-capacity preset (series blow-up showcase)
    population  N(t) via the Mittag-Leffler function

Flags mirror the config key vocabulary (beta, gamma, mu, lambda, alpha,
i0, T, dt, methods, terms, out, formats); ``--config FILE`` loads a JSON
config (or a previously emitted manifest) and explicit flags override it.

Exit codes: 0 success, 1 validation error, 2 numeric failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .coeffs import a_coeffs, euler_alpha
from .errors import NumericError, ValidationError
from .solvers import Method, TimeGrid

_FMT = ".17g"


def _add_config_flags(p: argparse.ArgumentParser, with_methods: bool = True) -> None:
    p.add_argument("--config", type=Path, help="JSON config or manifest to load")
    p.add_argument("--preset", choices=sorted(harness.PRESETS), help="named parameter preset")
    p.add_argument("--beta", type=float, help="contact rate")
    p.add_argument("--gamma", type=float, help="recovery removal rate")
    p.add_argument("--mu", type=float, help="birth/death removal rate")
    p.add_argument("--lambda", dest="lam", type=float, help="birth rate (population utility)")
    p.add_argument("--alpha", type=float, help="fractional order in (0, 1]")
    p.add_argument("--i0", type=float, help="initial infected fraction")
    p.add_argument("--T", type=float, help="final time")
    p.add_argument("--dt", type=float, help="time step")
    if with_methods:
        p.add_argument("--methods", help="comma-separated subset of series,pece,l1,classical")
    p.add_argument("--terms", type=int, help="series truncation order")
    p.add_argument("--out", type=Path, help="output directory")
    p.add_argument("--formats", help="comma-separated subset of csv,json,svg")


def _merged_config(args, forced_methods=None) -> harness.RunConfig:
    cfg = {}
    if args.config is not None:
        cfg.update(harness.read_config_dict(args.config))
    overrides = {
        "preset": getattr(args, "preset", None),
        "beta": getattr(args, "beta", None),
        "gamma": getattr(args, "gamma", None),
        "mu": getattr(args, "mu", None),
        "lambda": getattr(args, "lam", None),
        "alpha": getattr(args, "alpha", None),
        "i0": getattr(args, "i0", None),
        "T": getattr(args, "T", None),
        "dt": getattr(args, "dt", None),
        "methods": getattr(args, "methods", None),
        "terms": getattr(args, "terms", None),
        "out": None if getattr(args, "out", None) is None else str(args.out),
        "formats": getattr(args, "formats", None),
    }
    cfg.update({k: v for k, v in overrides.items() if v is not None})
    if forced_methods is not None:
        cfg["methods"] = forced_methods
    return harness.config_from_dict(cfg)


def _cmd_coeffs(args) -> int:
    build = euler_alpha if args.kind == "euler" else a_coeffs
    table = build(args.alpha, args.K)
    lines = ["k,value"]
    lines += [f"{k},{format(v, _FMT)}" for k, v in enumerate(table.values)]
    text = "\n".join(lines) + "\n"
    if args.out is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args) -> int:
    cfg = _merged_config(args, forced_methods=[args.method])
    traj = harness.solve_method(cfg, Method(args.method))
    if cfg.output_dir is not None:
        for f in harness.emit({Method(args.method): traj}, [], cfg):
            print(f)
    else:
        sys.stdout.write(harness._trajectory_csv(traj))
    return 0


def _cmd_compare(args) -> int:
    cfg = _merged_config(args)
    if len(cfg.methods) < 2:
        raise ValidationError("compare needs at least two methods (use --methods)")
    trajs = harness.run_methods(cfg)
    report = harness.compare_methods(trajs, cfg.params.alpha)
    for ma, mb, dist in report.pairs:
        print(f"{ma} vs {mb}: {dist:.6e}")
    if cfg.output_dir is not None:
        for f in harness.emit(trajs, [report], cfg):
            print(f)
    return 0


def _cmd_table1(args) -> int:
    reports = harness.run_table1(
        terms=args.terms or 120,
        out=args.out,
        formats=tuple((args.formats or "csv,json").replace(",", " ").split()),
    )
    print(harness.format_report_table(reports))
    return 0


def _cmd_c0_suite(args) -> int:
    entries = harness.run_c0_suite(
        out=args.out,
        formats=tuple((args.formats or "csv,json").replace(",", " ").split()),
    )
    for e in entries:
        status = (
            "converged on the whole grid"
            if e.series_diverged_at is None
            else f"series lost convergence at t={e.series_diverged_at:g}"
        )
        print(
            f"alpha={e.alpha:g}: {status}; schemes bounded in [0,1]: "
            f"{e.schemes_bounded}; crossing nodes {e.crossing}"
        )
    return 0


def _cmd_population(args) -> int:
    grid = TimeGrid(args.T, args.dt)
    n = harness.population_curve(args.alpha, args.lam, args.mu, args.n0, grid)
    lines = ["t,N"]
    lines += [
        f"{format(float(t), _FMT)},{format(float(v), _FMT)}"
        for t, v in zip(grid.nodes(), n)
    ]
    text = "\n".join(lines) + "\n"
    if args.out is not None:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
        print(out)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracsis",
        description="Fractional-order SIS model: series solutions, schemes, comparisons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="dump a coefficient table as CSV")
    p.add_argument("--kind", choices=("euler", "a"), required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("-K", type=int, default=40, help="table order (default 40)")
    p.add_argument("--out", type=Path, help="CSV file (default: stdout)")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("solve", help="run a single method")
    p.add_argument("--method", choices=[m.value for m in Method], required=True)
    _add_config_flags(p, with_methods=False)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("compare", help="run methods and report pairwise distances")
    _add_config_flags(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("table1", help="pairwise error table on the c-nonzero preset")
    p.add_argument("--terms", type=int, help="series truncation order (default 120)")
    p.add_argument("--out", type=Path, help="output directory")
    p.add_argument("--formats", help="comma-separated subset of csv,json,svg")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("c0-suite", help="zero-capacity preset across alphas")
    p.add_argument("--out", type=Path, help="output directory")
    p.add_argument("--formats", help="comma-separated subset of csv,json,svg")
    p.set_defaults(func=_cmd_c0_suite)

    p = sub.add_parser("population", help="population curve N(t) = N0 E_alpha((lambda-mu) t^alpha)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--n0", type=float, default=1.0)
    p.add_argument("--T", type=float, default=5.0)
    p.add_argument("--dt", type=float, default=0.05)
    p.add_argument("--out", type=Path, help="CSV file (default: stdout)")
    p.set_defaults(func=_cmd_population)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (NumericError, OverflowError) as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
