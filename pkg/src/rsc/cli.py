"""Command-line front end.

Subcommands: capacity, region, verify, simulate.  Exit codes: 0 for
success or PASS, 1 for a FAIL verdict, 2 for usage errors.  The field
order is taken from the RSC_FIELD environment variable (default 256).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .analysis import (
    achievable_region,
    instantaneous_rate,
    message_wise_rate,
    relay_capacity,
    scheme_rate,
)
from .erasures import ErasureTimeline
from .galois import field_of_order
from .harness import (
    SIMULATION_CSV_HEADER,
    monte_carlo,
    verify_deterministic,
    verify_pair,
    verify_sliding_window,
)
from .relay import (
    build_instantaneous_forwarding,
    build_message_wise_df,
    build_symbol_wise_df,
)


class UsageError(Exception):
    pass


def _fmt(rate: Fraction) -> str:
    return f"{rate.numerator}/{rate.denominator} ({float(rate):.6f})"


def _field():
    try:
        return field_of_order(int(os.environ.get("RSC_FIELD", "256")))
    except ValueError as exc:
        raise UsageError(f"bad RSC_FIELD: {exc}") from exc


def _build_scheme(args):
    field = _field()
    if args.scheme == "symbol":
        return build_symbol_wise_df(args.t, args.n1, args.n2, field)
    if args.scheme == "message":
        t1, t2 = args.t1, args.t2
        if t1 is None or t2 is None:
            _, t1, t2 = message_wise_rate(args.t, args.n1, args.n2)
        return build_message_wise_df(args.t, args.n1, args.n2, t1, t2, field)
    return build_instantaneous_forwarding(args.t, args.n1, args.n2, field)


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_capacity(args) -> int:
    c = relay_capacity(args.t, args.n1, args.n2)
    rmsg, t1, t2 = message_wise_rate(args.t, args.n1, args.n2)
    cif = instantaneous_rate(args.t, args.n1, args.n2)
    print(f"C={_fmt(c)}  Rmsg={_fmt(rmsg)} at T1={t1},T2={t2}  Cif={_fmt(cif)}")
    return 0


def cmd_region(args) -> int:
    try:
        threshold = Fraction(args.rate)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --rate: {exc}") from exc
    if threshold <= 0:
        raise UsageError("--rate must be positive")
    pairs = achievable_region(args.t, threshold, args.scheme)
    if args.format == "table":
        lines = [f"{'N1':>3} {'N2':>3} {'rate':>8}"]
        for n1, n2 in pairs:
            r = scheme_rate(args.scheme, args.t, n1, n2)
            lines.append(f"{n1:>3} {n2:>3} {str(r):>8}")
        text = "\n".join(lines) + f"\n{len(pairs)} pairs\n"
    else:
        rows = ["n1,n2,rate_num,rate_den"]
        for n1, n2 in pairs:
            r = scheme_rate(args.scheme, args.t, n1, n2)
            rows.append(f"{n1},{n2},{r.numerator},{r.denominator}")
        text = "\n".join(rows) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    scheme = _build_scheme(args)
    horizon = args.horizon or 2 * max(scheme.n, scheme.m) + 3 * scheme.T
    if args.pattern is not None:
        hop1 = ErasureTimeline.from_string(args.pattern)
        hop2 = (ErasureTimeline.from_string(args.pattern2)
                if args.pattern2 else ErasureTimeline.clear(hop1.horizon))
        losses = verify_pair(scheme, hop1, hop2)
        if losses:
            print(f"FAIL {scheme.scheme_id}: {len(losses)} lost symbols, "
                  f"first s{losses[0][0]}[{losses[0][1]}]")
            return 1
        print(f"PASS {scheme.scheme_id} on explicit pattern")
        return 0
    if args.mode == "window":
        report = verify_sliding_window(scheme, horizon, args.budget, args.seed)
    else:
        mode = "exhaustive" if args.mode == "exhaustive" else "random"
        report = verify_deterministic(scheme, horizon, mode, args.budget, args.seed)
    print(report.summary())
    return 0 if report.passed else 1


def _parse_grid(spec: str) -> list[float]:
    try:
        if ":" in spec:
            lo, hi, step = (float(v) for v in spec.split(":"))
            if step <= 0:
                raise ValueError("step must be positive")
            out = []
            v = lo
            while v <= hi + 1e-12:
                out.append(round(v, 12))
                v += step
            return out
        return [float(spec)]
    except ValueError as exc:
        raise UsageError(f"bad grid {spec!r}: {exc}") from exc


def cmd_simulate(args) -> int:
    alphas = _parse_grid(args.alpha_grid) if args.alpha_grid else [args.alpha]
    reports = []
    for alpha in alphas:
        beta = args.beta if args.beta is not None else alpha
        scheme = _build_scheme(args)
        reports.append(monte_carlo(scheme, alpha, beta, args.uses,
                                   burn_in=args.burn_in, seed=args.seed,
                                   workers=args.workers))
    if args.format == "table":
        lines = [f"{'alpha':>6} {'beta':>6} {'scheme':>8} {'loss':>12} {'ci':>10} {'bound':>10}"]
        for r in reports:
            bound = f"{r.bound:.3e}" if r.bound is not None else "-"
            lines.append(f"{r.alpha:>6} {r.beta:>6} {r.kind:>8} "
                         f"{r.loss_prob:>12.6e} {r.ci_halfwidth:>10.3e} {bound:>10}")
        text = "\n".join(lines) + "\n"
    else:
        text = "\n".join([SIMULATION_CSV_HEADER] + [r.csv_row() for r in reports]) + "\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsc",
        description="Streaming erasure codes over a source-relay-destination path",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def scheme_args(p, scheme_flag=True):
        p.add_argument("--t", type=int, required=True, help="decoding delay T")
        p.add_argument("--n1", type=int, required=True, help="first-hop erasure budget")
        p.add_argument("--n2", type=int, required=True, help="second-hop erasure budget")
        if scheme_flag:
            p.add_argument("--scheme", choices=["symbol", "message", "if"],
                           default="symbol")
            p.add_argument("--t1", type=int, help="message-wise relay delay")
            p.add_argument("--t2", type=int, help="message-wise destination delay")

    p = sub.add_parser("capacity", help="print exact rates for (T, N1, N2)")
    scheme_args(p, scheme_flag=False)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("region", help="pairs (N1, N2) meeting a rate threshold")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--rate", required=True, help="threshold, e.g. 2/3")
    p.add_argument("--scheme", choices=["symbol", "message", "if"], default="symbol")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--format", choices=["csv", "table"], default="csv")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("verify", help="deterministic achievability check")
    scheme_args(p)
    p.add_argument("--mode", choices=["exhaustive", "random", "window"],
                   default="exhaustive")
    p.add_argument("--horizon", type=int)
    p.add_argument("--budget", type=int, default=1000,
                   help="trials for random/window modes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pattern", help="explicit hop-1 timeline as a 0/1 string")
    p.add_argument("--pattern2", help="explicit hop-2 timeline as a 0/1 string")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="Monte Carlo loss-probability sweep")
    scheme_args(p)
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--beta", type=float, help="defaults to alpha")
    p.add_argument("--alpha-grid", dest="alpha_grid",
                   help="lo:hi:step sweep over alpha (beta follows unless set)")
    p.add_argument("--uses", type=int, default=100000, help="channel uses per point")
    p.add_argument("--burn-in", dest="burn_in", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--format", choices=["csv", "table"], default="csv")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
