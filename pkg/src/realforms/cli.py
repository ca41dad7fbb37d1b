"""Command line front end.

Exit codes: 0 all checks pass, 1 an identity failed (or a loop is
undersampled), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import re
import sys

from .bezout import bezout_pair
from .errors import Undersampled
from .report import CHECK_NAMES, BundleReport, global_checks, verify_range
from .topology import LoopSample, classify, model_label, winding_number

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def cmd_report(args) -> int:
    if args.n < 0:
        return _usage(f"--n must be >= 0, got {args.n}")
    report = BundleReport.build(args.n)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.format == "latex":
        sys.stdout.write(report.to_latex())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _parse_range(text: str):
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        return None
    return int(m.group(1)), int(m.group(2))


def cmd_verify(args) -> int:
    rng = _parse_range(args.range)
    if rng is None:
        return _usage(f"--range must look like a..b with a, b >= 0, got {args.range!r}")
    lo, hi = rng
    if lo > hi:
        return _usage(f"empty range {lo}..{hi}")
    rows = verify_range(lo, hi, parallel=args.parallel, inject_bad_bezout=args.inject_bad_bezout)
    glob = global_checks()

    header = ["n"] + list(CHECK_NAMES)
    widths = [max(3, len(h)) for h in header]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    failures = []
    for n, checks in rows:
        cells = [str(n)] + ["pass" if checks[c] else "FAIL" for c in CHECK_NAMES]
        print("  ".join(c.ljust(w) for c, w in zip(cells, widths)))
        failures += [f"n={n}: {c}" for c in CHECK_NAMES if not checks[c]]
    for name, ok in glob.items():
        print(f"global  {name}  {'pass' if ok else 'FAIL'}")
        if not ok:
            failures.append(name)
    if failures:
        print("failed identities:")
        for f in failures:
            print(f"  {f}")
        return EXIT_FAIL
    print(f"all {len(rows)} rows and {len(glob)} global checks pass")
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.rank < 1:
        return _usage(f"--rank must be >= 1, got {args.rank}")
    try:
        loop = LoopSample.from_csv(args.loop)
    except (OSError, ValueError) as exc:
        return _usage(f"cannot read loop {args.loop}: {exc}")
    try:
        w = winding_number(loop)
    except Undersampled as exc:
        print(f"undersampled loop: {exc}", file=sys.stderr)
        return EXIT_FAIL
    cls = classify(args.rank, w)
    print(f"samples: {loop.N}")
    print(f"winding: {w}")
    print(f"rank: {cls.rank}")
    if cls.rank == 1:
        print("class: 0 (line bundles on S^2 are trivial)")
    elif cls.rank == 2:
        note = " (tangent bundle of S^2)" if w == 2 else ""
        print(f"class: {cls.class_value}")
        print(f"model: {model_label(w)}{note}")
    else:
        what = "1-stably trivial" if cls.class_value == 0 else "stably equivalent to V_1"
        print(f"class: {cls.class_value} ({what})")
    print("provenance: clutching loop retracted onto SO(2) by polar decomposition, "
          "winding counted by angle unwrapping")
    return EXIT_OK


def cmd_bezout(args) -> int:
    if args.n < 1:
        return _usage(f"--n must be >= 1 (n = 0 uses the convention P = Q = 1/2), got {args.n}")
    P, Q = bezout_pair(args.n)
    print(f"P = {P}")
    print(f"Q = {Q}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realforms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="construct Sigma_n and report checks and invariants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="run every identity check over a range of n")
    p.add_argument("--range", required=True, help="inclusive range a..b")
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--inject-bad-bezout", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify a sampled clutching loop")
    p.add_argument("--loop", required=True, help="CSV, one line g11,g12,g21,g22 per sample")
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bezout", help="print the minimal Bezout pair for n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bezout)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
