"""``skewctl`` command-line front end.

Exit codes: 0 success, 1 property violation (``verify``), 2 input or parse
error, 3 a bound exceeded the sum it bounds (``bounds``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import figures, verify
from .channel_bounds import channel_report
from .errors import SkewInfoError
from .linalg import Tolerances
from .observable_bounds import report
from .serialization import __doc__ as SPEC_GRAMMAR
from .serialization import parse_channels, parse_number, parse_observables, parse_state
from .skew import skew_channel, skew_observable

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


def tolerances() -> Tolerances:
    raw = os.environ.get("SKEWCTL_TOL_EQ")
    if raw is None:
        return Tolerances()
    try:
        return Tolerances(eq_tol=float(raw))
    except ValueError as exc:
        raise SkewInfoError(f"SKEWCTL_TOL_EQ={raw!r} is not a valid tolerance") from exc


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_skew(args) -> int:
    rho = parse_state(args.state)
    if args.observable is not None:
        obs = parse_observables(args.observable)
        if len(obs) != 1:
            raise SkewInfoError("--observable must name exactly one observable (e.g. pauli.z)")
        value = skew_observable(rho, obs[0])
        kind = "observable"
    else:
        chans = parse_channels(args.channel)
        if len(chans) != 1:
            raise SkewInfoError("--channel must name exactly one channel")
        value = skew_channel(rho, chans[0])
        kind = "channel"
    print(f"{value:.12g}")
    if args.json:
        _emit({"kind": kind, "skew": value}, args.json)
    return EXIT_OK


def cmd_bounds(args) -> int:
    tol = tolerances()
    rho = parse_state(args.state)
    if args.kind == "obs":
        rep = report(rho, parse_observables(args.targets), tol)
    else:
        rep = channel_report(rho, parse_channels(args.targets), identity_only=args.identity_only, tol=tol)
    _emit(rep.to_dict(), args.out)
    bad = rep.violations(tol.eq_tol)
    if bad:
        print(f"bound validity violated: {', '.join(bad)}", file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK


def cmd_figure(args) -> int:
    res = tuple(int(r) for r in args.res.split(",")) if args.res else ()
    spec = figures.FigureSpec(args.figure, res=res, q=args.q, a=args.a, slice=args.slice, out=args.out)
    text = figures.write_figure(spec)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    dims = tuple(int(d) for d in args.dims.split(","))
    summary = verify.run(args.suite, trials=args.trials, seed=args.seed, dims=dims, eq_tol=tolerances().eq_tol)
    _emit(summary, args.out)
    return EXIT_OK if summary["passed"] else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewctl",
        description="Wigner-Yanase skew information and sum uncertainty bounds.",
        epilog=SPEC_GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("skew", help="skew information of a state w.r.t. an observable or channel")
    p.add_argument("--state", required=True)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--observable")
    target.add_argument("--channel")
    p.add_argument("--json", metavar="PATH", help="also write the value as JSON")
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("bounds", help="bound report for observables (obs) or channels (chan)")
    p.add_argument("kind", choices=("obs", "chan"))
    p.add_argument("--state", required=True)
    p.add_argument("--targets", required=True, help="e.g. pauli, spin1, pd:0.1,ad:0.1,bf:0.1, or a JSON file")
    p.add_argument("--identity-only", action="store_true", help="skip the permutation search")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("figure", help="write the CSV data behind a figure")
    p.add_argument("figure", choices=figures.FIGURES)
    p.add_argument("--out")
    p.add_argument("--res", help="points per axis, e.g. 400 or 120,240")
    p.add_argument("--q", type=parse_number, default=0.1, help="channel parameter for fig5")
    p.add_argument("--a", type=parse_number, default=figures.catalog.QUTRIT_A_MAX, help="qutrit parameter for fig4")
    p.add_argument("--slice", action="store_true", help="fig3: phi = pi/4 slice; fig4: beta = pi/2 slice")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", default="all", choices=(*verify.SUITES, "all"))
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--dims", default="2,3")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SkewInfoError, KeyError, ValueError) as exc:
        print(f"skewctl: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
