"""Command-line harness for the seeded Monte Carlo experiments.

Subcommands: spectrum, extremes, ppt, pure, selftest, laws.  Reports are
written as JSON or CSV; per-trial records are a pure function of the config
and master seed.  Exit codes: 0 all good, 1 usage error, 2 self-test
failure, 3 threshold miss in --check mode.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import experiments, reporting
from .errors import ParameterError

PROG = "ptwishart"
THREADS_ENV = "PTWISHART_THREADS"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SELFTEST = 2
EXIT_THRESHOLD = 3

_DEFAULTS = {
    # subcommand: (d, trials) chosen so a default run finishes in about a minute
    "spectrum": (30, 10),
    "extremes": (40, 10),
    "ppt": (15, 50),
    "pure": (50, 20),
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_common(parser, subcommand):
    d_default, trials_default = _DEFAULTS[subcommand]
    parser.add_argument("--d", type=int, default=None, help=f"square factor dimension d1 = d2 = d (default {d_default})")
    parser.add_argument("--d1", type=int, default=None, help="first factor dimension")
    parser.add_argument("--d2", type=int, default=None, help="second factor dimension")
    parser.add_argument("--alpha", type=float, default=None, help="ancilla aspect ratio; p = floor(alpha * d1 * d2)")
    parser.add_argument("--p", type=int, default=None, help="explicit ancilla dimension (alternative to --alpha)")
    parser.add_argument("--trials", type=int, default=trials_default)
    parser.add_argument("--field", choices=["real", "complex"], default="complex")
    parser.add_argument("--seed", type=int, default=0, help="64-bit master seed")
    parser.add_argument("--format", choices=["csv", "json"], default="json")
    parser.add_argument("--out", default=None, help="write the report to this path")
    parser.add_argument("--bins", type=int, default=100)
    parser.add_argument("--threads", type=int, default=None, help=f"trial workers (default ${THREADS_ENV} or 1)")
    parser.add_argument("--check", action="store_true", help="evaluate the built-in threshold; exit 3 on a miss")
    parser.add_argument("--tol", type=float, default=None, help="threshold for --check")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Partially transposed Wishart spectra: Monte Carlo and exact combinatorics")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalue distribution of partially transposed samples")
    _add_common(sp, "spectrum")
    sp.add_argument("--ensemble", choices=["wishart", "induced", "mixture"], default="wishart")

    ex = sub.add_parser("extremes", help="extreme eigenvalues of partially transposed Wishart samples")
    _add_common(ex, "extremes")

    pp = sub.add_parser("ppt", help="PPT frequency sweep across ancilla aspect ratios")
    _add_common(pp, "ppt")
    pp.add_argument("--ensemble", choices=["induced", "mixture"], default="induced")
    pp.add_argument("--alphas", type=float, nargs="+", default=[2.0, 3.0, 4.0, 5.0, 6.0, 8.0])

    pu = sub.add_parser("pure", help="spectrum of partially transposed uniform pure states")
    _add_common(pu, "pure")
    pu.add_argument("--method", choices=["schmidt", "eigh"], default="schmidt",
                    help="schmidt-coefficient formula or direct eigendecomposition")

    st = sub.add_parser("selftest", help="exhaustive combinatorics and law-identity checks")
    st.add_argument("--format", choices=["csv", "json"], default="json")
    st.add_argument("--out", default=None)

    lw = sub.add_parser("laws", help="closed-form moment and density tables")
    lw.add_argument("--alpha", type=float, default=4.0)
    lw.add_argument("--bins", type=int, default=100)
    lw.add_argument("--format", choices=["csv", "json"], default="json")
    lw.add_argument("--out", default=None)
    return parser


def _resolve_dims(args) -> tuple[int, int]:
    d_default, _ = _DEFAULTS[args.subcommand]
    if args.d is not None:
        if args.d1 is not None or args.d2 is not None:
            raise _UsageError("give either --d or --d1/--d2, not both")
        return args.d, args.d
    if (args.d1 is None) != (args.d2 is None):
        raise _UsageError("--d1 and --d2 must be given together")
    if args.d1 is not None:
        return args.d1, args.d2
    return d_default, d_default


def _resolve_threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get(THREADS_ENV)
    if not env:
        return 1
    try:
        return int(env)
    except ValueError:
        raise _UsageError(f"{THREADS_ENV} must be an integer, got {env!r}")


def _build_config(args) -> experiments.ExperimentConfig:
    d1, d2 = _resolve_dims(args)
    alpha, p = args.alpha, args.p
    if args.subcommand == "ppt":
        if alpha is not None or p is not None:
            raise _UsageError("the ppt sweep takes its grid from --alphas")
    elif args.subcommand == "pure":
        if alpha is not None or p is not None:
            raise _UsageError("pure-state runs take no ancilla parameter")
    else:
        if alpha is not None and p is not None:
            raise _UsageError("give exactly one of --alpha and --p")
        if alpha is None and p is None:
            alpha = 4.0
    return experiments.ExperimentConfig(
        subcommand=args.subcommand,
        d1=d1,
        d2=d2,
        trials=args.trials,
        alpha=alpha,
        p=p,
        field=args.field,
        ensemble=getattr(args, "ensemble", "wishart" if args.subcommand != "pure" else "pure"),
        master_seed=args.seed,
        output_format=args.format,
        output_path=args.out,
        bins=args.bins,
        threads=_resolve_threads(args),
        alphas=tuple(args.alphas) if getattr(args, "alphas", None) else None,
        method=getattr(args, "method", "schmidt"),
        check=args.check,
        tol=args.tol,
    )


def _summary_lines(report: dict) -> list[str]:
    lines = []
    aggregates = report.get("aggregates", {})
    for name, agg in aggregates.get("statistics", {}).items():
        lines.append(f"{name}: mean={agg['mean']:.6g} stderr={agg['stderr']:.3g} min={agg['min']:.6g} max={agg['max']:.6g}")
    for entry in aggregates.get("per_alpha", []):
        lines.append(
            f"alpha={entry['alpha']:g} p={entry['p']} ppt_frequency={entry['ppt_frequency']:.3f} "
            f"ci=[{entry['ci_low']:.3f}, {entry['ci_high']:.3f}]"
        )
    for item in report.get("items", []):
        status = "pass" if item["pass"] else "FAIL"
        lines.append(f"{status} {item['name']}: expected={item['expected']} actual={item['actual']}")
    for check in report.get("checks", []):
        status = "pass" if check["pass"] else "MISS"
        lines.append(f"{status} {check['name']}: value={check['value']:.6g} threshold={check['threshold']:.6g}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"{PROG}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    start = time.monotonic()
    try:
        if args.subcommand == "selftest":
            report = experiments.run_selftest()
            fmt, out = args.format, args.out
        elif args.subcommand == "laws":
            config = experiments.ExperimentConfig(
                subcommand="laws", d1=1, d2=1, trials=1, alpha=args.alpha, bins=args.bins,
                output_format=args.format, output_path=args.out,
            )
            report = experiments.run_laws(config)
            fmt, out = args.format, args.out
        else:
            config = _build_config(args)
            runner = {
                "spectrum": experiments.run_spectrum,
                "extremes": experiments.run_extremes,
                "ppt": experiments.run_ppt_sweep,
                "pure": experiments.run_pure_state,
            }[args.subcommand]
            report = runner(config)
            fmt, out = config.output_format, config.output_path
    except _UsageError as exc:
        print(f"{PROG}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"{PROG}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.monotonic() - start

    text = reporting.render(report, fmt)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        for line in _summary_lines(report):
            print(line)
        print(f"report written to {out}")
    else:
        sys.stdout.write(text)
    # timing is provenance for the console only; reports stay byte-reproducible
    print(f"{PROG}: {args.subcommand} finished in {elapsed:.2f}s", file=sys.stderr)

    if args.subcommand == "selftest" and not report["all_pass"]:
        return EXIT_SELFTEST
    if report.get("all_checks_pass") is False:
        return EXIT_THRESHOLD
    return EXIT_OK


def entry():
    raise SystemExit(main())
