"""Command-line front end: verification suites, closed-form printing, sampling.

Exit codes: 0 all requested checks pass, 1 identity failure, 2 usage
error, 3 unsupported hypothesis (even m), 4 invalid P_k, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import verify
from .axial import format_axial
from .cliffpoly import format_poly, hermite_closed, hermite_rec, parse_poly
from .fueter import (
    EvenDimensionError,
    InvalidPkError,
    axial_to_poly,
    fueter,
    gauss_ck_pair,
    seed as make_seed,
    triangle_check,
    vekua_ok,
)
from .numeric import EvalPoint, ck_gauss_restriction, ck_gauss_series, eval_axial, write_sample_csv

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_EVEN_M = 3
EXIT_BAD_PK = 4
EXIT_IO = 5


def parse_range(text: str) -> list:
    """`lo:hi:count` with inclusive endpoints, or a single value."""
    parts = text.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"range must be 'lo:hi:count' or a single value, got {text!r}")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 1:
        raise argparse.ArgumentTypeError("range count must be >= 1")
    from .numeric import lin_range

    return lin_range(lo, hi, count)


def cmd_verify(args) -> int:
    ms = (args.m,) if args.m else None
    try:
        results = verify.run_suite(args.suite, rng_seed=args.rng_seed, ms=ms, csv_from=getattr(args, "from_csv", None))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for res in results:
        print(res.line())
    passed = all(r.passed for r in results)
    print(f"suite {args.suite}: {'PASS' if passed else 'FAIL'} ({sum(r.passed for r in results)}/{len(results)} checks)")
    if args.json:
        payload = {
            "suite": args.suite,
            "rng_seed": args.rng_seed,
            "passed": passed,
            "checks": [
                {"id": r.id, "passed": r.passed, "max_error": r.max_error, "detail": r.detail}
                for r in results
            ],
        }
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_hermite(args) -> int:
    if args.n < 0 or args.m < 1:
        print("error: need n >= 0 and m >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.form in ("rec", "both"):
        rec = hermite_rec(args.n, args.m).poly
        print(f"rec:    {format_poly(rec)}")
    if args.form in ("closed", "both"):
        closed = hermite_closed(args.n, args.m).poly
        print(f"closed: {format_poly(closed)}")
    if args.form == "both":
        verdict = "EQUAL" if rec == closed else "DIFFER"
        print(verdict)
        return EXIT_OK if verdict == "EQUAL" else EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_fueter(args) -> int:
    pk = None
    if args.pk_file:
        try:
            with open(args.pk_file) as fh:
                pk = parse_poly(fh.read().strip(), args.m)
        except OSError as exc:
            print(f"error: cannot read {args.pk_file}: {exc}", file=sys.stderr)
            return EXIT_IO
        except ValueError as exc:
            print(f"error: cannot parse P_k: {exc}", file=sys.stderr)
            return EXIT_BAD_PK
    s = make_seed(args.seed, args.n)
    pair = fueter(s, args.k, args.m, pk)
    pk_text = format_poly(pair.pk) if pair.pk is not None else "(generic)"
    print(f"m = {pair.m}, k = {pair.k}, P_k = {pk_text}")
    print(f"A = {format_axial(pair.A)}")
    print(f"B = {format_axial(pair.B)}")
    ok = vekua_ok(pair)
    print(f"VEKUA {'OK' if ok else 'FAIL'}")
    code = EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.seed == "z_pow":
        poly = axial_to_poly(pair) if pair.pk is not None else None
        if poly is not None:
            print(f"poly = {format_poly(poly)}")
            res = triangle_check(args.n, args.k, args.m, pair.pk)
            label = "OK" if res.ok else "FAIL"
            const = f" c={res.constant}" if res.constant is not None else ""
            print(f"TRIANGLE {label}{const}")
            if not res.ok:
                code = EXIT_CHECK_FAILED
    return code


def cmd_ck_gauss(args) -> int:
    if args.r < 0:
        print("error: r must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    xs = (args.r,) + (0.0,) * (args.m - 1)
    pt = EvalPoint(args.x0, xs)
    series = ck_gauss_series(pt, args.m, trunc=args.trunc)
    print(f"series (N={args.trunc}): {series}")
    if args.r == 0:
        closed = ck_gauss_restriction(args.x0, args.m)
        print(f"closed (x_=0 axis): {closed!r}")
        err = abs(series[0] - closed) / max(abs(closed), 1e-300)
    else:
        closed_mv = eval_axial(gauss_ck_pair(args.m), pt)
        print(f"closed (axial):     {closed_mv}")
        err = (series - closed_mv).norm() / max(closed_mv.norm(), 1e-300)
    print(f"relative deviation: {err:.3e}")
    return EXIT_OK


def cmd_sample(args) -> int:
    x0_vals = args.x0
    r_vals = args.r
    try:
        nrows = write_sample_csv(args.out, args.target, args.m, x0_vals, r_vals)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {nrows} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fueterlab",
        description="Exact and numerical workbench for axial monogenic functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run an identity/property suite")
    p.add_argument("--suite", required=True, choices=verify.SUITE_NAMES)
    p.add_argument("--m", type=int, default=None, help="restrict suites to a single dimension")
    p.add_argument("--rng-seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--from", dest="from_csv", default=None, metavar="CSV", help="re-verify a sample CSV")
    p.add_argument("--json", default=None, metavar="PATH", help="also write results as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hermite", help="print generalized Hermite polynomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", choices=("rec", "closed", "both"), default="rec")
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("fueter", help="transform a holomorphic seed and check the Vekua system")
    p.add_argument("--seed", required=True, choices=("iz", "inv_z", "z_pow", "gauss", "gauss_fund"))
    p.add_argument("--n", type=int, default=None, help="order for the z_pow seed")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--pk-file", default=None, help="file with a P_k polynomial in the text grammar")
    p.set_defaults(func=cmd_fueter)

    p = sub.add_parser("ck-gauss", help="evaluate the Gaussian extension, series vs closed form")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x0", type=float, default=0.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--trunc", type=int, default=60)
    p.set_defaults(func=cmd_ck_gauss)

    p = sub.add_parser("sample", help="write a CSV grid of axial values")
    p.add_argument("--target", required=True, choices=("ck-gauss", "gauss-fund"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x0", type=parse_range, required=True, help="value or lo:hi:count")
    p.add_argument("--r", type=parse_range, required=True, help="value or lo:hi:count")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sample)

    return parser


_RANGE_FLAGS = ("--x0", "--r")
_NEGATIVE_VALUE = re.compile(r"-(?:\d+\.?\d*|\.\d+)(?::.*)?$")


def _join_negative_values(argv):
    """Fold `--x0 -2:2:41` into `--x0=-2:2:41` so argparse keeps the value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RANGE_FLAGS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(list(argv) if argv is not None else sys.argv[1:]))
    try:
        return args.func(args)
    except EvenDimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVEN_M
    except InvalidPkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PK
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
