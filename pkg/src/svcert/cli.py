"""Command-line interface.

Exit codes: 0 certified / pass, 1 usage error, 2 inconclusive or defect
suggested, 3 verify-paper mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import bounds, contact, reproduction, terracini
from .certificate import (
    bounds_certificate,
    contact_certificate,
    secant_certificate,
)
from .errors import SVCertError
from .multiindex import Format

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return values


def _s_value(text: str):
    if text == "max":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'max', got {text!r}")


def _add_format(p, with_h=True):
    p.add_argument("--n", type=_int_list, required=True, help="factor dimensions, e.g. 1,2")
    p.add_argument("--d", type=_int_list, required=True, help="factor degrees, e.g. 1,7")
    if with_h:
        p.add_argument("--h", type=int, required=True, help="number of points")


def _add_sampling(p):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=terracini.DEFAULT_RETRIES)
    p.add_argument("--box", type=int, default=terracini.DEFAULT_BOX,
                   help="half-width of the integer sampling box")
    p.add_argument("--out", help="write the certificate here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="svcert", description="Exact secant and contact-locus "
                     "certificates for Segre-Veronese varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("secant", help="secant defectiveness via Terracini's lemma")
    _add_format(p)
    _add_sampling(p)

    p = sub.add_parser("contact", help="contact-locus tests")
    csub = p.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    for mode, text in (("wd", "h-weak defectiveness"),
                       ("twd", "h-tangential weak defectiveness"),
                       ("hstwd", "(h,s)-tangential weak defectiveness"),
                       ("osc", "osculating-space hypothesis behind the weak defectiveness bound")):
        q = csub.add_parser(mode, help=text)
        _add_format(q, with_h=mode != "osc")
        if mode == "hstwd":
            q.add_argument("--s", type=int, required=True)
        if mode == "osc":
            q.add_argument("--orders", type=_int_list, required=True)
            q.add_argument("--s", type=_s_value, default=None, help="dimension of Pi or 'max'")
            q.add_argument("--placement", choices=("random", "coordinate"), default="random")
        q.add_argument("--max-order", type=int,
                       default=contact.DEFAULT_OSC_ORDER if mode == "osc" else 0,
                       help="highest order of the local isolation test")
        _add_sampling(q)

    p = sub.add_parser("bounds", help="closed-form bounds and classifications")
    _add_format(p, with_h=False)
    p.add_argument("--out")

    p = sub.add_parser("verify-paper", help="run the reproduction suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=terracini.DEFAULT_RETRIES)
    p.add_argument("--box", type=int, default=terracini.DEFAULT_BOX)
    p.add_argument("--only", help=f"comma-separated groups or row ids; groups: "
                   f"{', '.join(reproduction.GROUPS)}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default="certificates", help="certificate directory")
    return parser


def _emit(cert, out):
    text = cert.to_json()
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format(args) -> Format:
    try:
        return Format(args.n, args.d)
    except (ValueError, SVCertError) as exc:
        raise UsageError(str(exc))


def cmd_secant(args) -> int:
    fmt = _format(args)
    start = time.perf_counter()
    verdict = terracini.secant_defect_check(fmt, args.h, args.seed, args.retries, args.box)
    cert = secant_certificate(fmt, args.h, args.seed, verdict,
                              {"retries": args.retries, "box": args.box})
    cert.wall_time_ms = int(1000 * (time.perf_counter() - start))
    _emit(cert, args.out)
    return EXIT_OK if verdict.status == terracini.NON_DEFECTIVE else EXIT_INCONCLUSIVE


def cmd_contact(args) -> int:
    fmt = _format(args)
    params = {"retries": args.retries, "box": args.box, "max_order": args.max_order}
    common = dict(seed=args.seed, retries=args.retries, bound=args.box, max_order=args.max_order)
    start = time.perf_counter()
    h = getattr(args, "h", None)
    if args.mode == "wd":
        report = contact.wd_check(fmt, h, **common)
    elif args.mode == "twd":
        report = contact.twd_check(fmt, h, **common)
    elif args.mode == "hstwd":
        report = contact.hs_twd_check(fmt, h, args.s, **common)
    else:
        params["orders"] = list(args.orders)
        params["placement"] = args.placement
        report = contact.osculating_hypothesis_check(fmt, args.orders, args.s,
                                                     placement=args.placement, **common)
    cert = contact_certificate(fmt, h, args.seed, report, params)
    cert.wall_time_ms = int(1000 * (time.perf_counter() - start))
    _emit(cert, args.out)
    return EXIT_OK if report.status == contact.NOT_TWD else EXIT_INCONCLUSIVE


def cmd_bounds(args) -> int:
    fmt = _format(args)
    start = time.perf_counter()
    cert = bounds_certificate(fmt, bounds.applicable_bounds(fmt))
    cert.wall_time_ms = int(1000 * (time.perf_counter() - start))
    _emit(cert, args.out)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    try:
        reproduction.select_rows(args.only)
    except ValueError as exc:
        raise UsageError(str(exc))
    results = reproduction.run_suite(args.seed, args.retries, args.box, args.only,
                                    args.jobs, args.out)
    print(reproduction.format_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_MISMATCH


COMMANDS = {
    "secant": cmd_secant,
    "contact": cmd_contact,
    "bounds": cmd_bounds,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, SVCertError, ValueError) as exc:
        print(f"svcert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
