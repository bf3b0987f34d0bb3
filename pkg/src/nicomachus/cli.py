"""Command-line front end: run a verification, print its report, set the exit code.

Exit status is 0 when every check is pass or info, 1 when any check failed,
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import cfrac, identities, sequences
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--parallel", choices=["on", "off"], default="off")
    p.add_argument("--timing", choices=["on", "off"], default="on",
                   help="include elapsedMillis in JSON output (off gives byte-identical runs)")
    p.add_argument("--out", metavar="FILE", help="also write the report to FILE atomically")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="nicomachus", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    verify = groups.add_parser("verify", help="symbolic identity checks").add_subparsers(dest="cmd", required=True)
    p = leaf(verify, "thm1", "the three-term identity for one parity")
    p.add_argument("--parity", choices=["odd", "even"], required=True)
    p = leaf(verify, "catalog", "a catalog identity (or all of them)")
    p.add_argument("--id", required=True, choices=sorted(identities.CATALOG) + ["all"])
    p.add_argument("--bound", type=_positive)
    p = leaf(verify, "matrix", "the coefficient-matrix proof")
    p.add_argument("--variant", choices=["mx", "xm"], default="mx")
    p = leaf(verify, "thm4", "the sqrt(11) family of sum identities")
    p.add_argument("--k", type=_positive, required=True)
    leaf(verify, "sqrt11", "the limiting identity over Q(sqrt 11)")
    leaf(verify, "cubic", "the cubic pair solving the 7m^3(1+m)^3 identity")
    leaf(verify, "double", "the double-equation specializations")

    disc = groups.add_parser("disc", help="discriminant of the power-sum combination").add_subparsers(
        dest="cmd", required=True)
    leaf(disc, "report", "factor F of the discriminant and term counts")

    seq = groups.add_parser("seq", help="the u_k and alpha_k sequences").add_subparsers(dest="cmd", required=True)
    p = leaf(seq, "u", "u_k by series, closed form and recurrence")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--method", choices=["series", "closed", "recurrence", "all"], default="all")
    p = leaf(seq, "alpha", "alpha_k by all routes")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--method", choices=["all"], default="all")

    cong = groups.add_parser("cong", help="congruences of series coefficients").add_subparsers(
        dest="cmd", required=True)
    p = leaf(cong, "scan", "scan a preset generating function")
    p.add_argument("--preset", choices=sorted(sequences.PRESETS), required=True)
    p.add_argument("--count", type=_positive, default=200)
    p = leaf(cong, "construct", "build a generating function with all coefficients 1 mod M")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--count", type=_positive, default=200)

    cf = groups.add_parser("cfrac", help="continued fractions of the roots near -4").add_subparsers(
        dest="cmd", required=True)
    p = leaf(cf, "root", "expand one negated root")
    p.add_argument("--term", choices=["L", "R", "XP"], required=True)
    p.add_argument("--parity", choices=["odd", "even"], default="odd")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--quotients", type=_positive, default=8)
    p = leaf(cf, "conjecture", "compare the odd expansions with the conjectured prefixes")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--quotients", type=_positive, default=8)
    p = leaf(cf, "explore-even", "raw expansions for the even parity")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--quotients", type=_positive, default=8)
    return parser


def run(args: argparse.Namespace) -> Report:
    parallel = args.parallel == "on"
    key = (args.group, args.cmd)
    if key == ("verify", "thm1"):
        return identities.verify_theorem1(args.parity)
    if key == ("verify", "catalog"):
        return identities.catalog_verify(args.id, args.bound)
    if key == ("verify", "matrix"):
        return identities.matrix_report(args.variant)
    if key == ("verify", "thm4"):
        return sequences.verify_theorem4(args.k)
    if key == ("verify", "sqrt11"):
        return sequences.verify_sqrt11_limit()
    if key == ("verify", "cubic"):
        return identities.cubic_pair_report()
    if key == ("verify", "double"):
        return identities.double_equation_checks()
    if key == ("disc", "report"):
        return identities.discriminant_report()
    if key == ("seq", "u"):
        return sequences.u_report(args.k, args.method)
    if key == ("seq", "alpha"):
        return sequences.alpha_report(args.k)
    if key == ("cong", "scan"):
        return sequences.congruence_preset(args.preset, args.count)
    if key == ("cong", "construct"):
        try:
            return sequences.remark6_construct(args.m, args.count)[2]
        except ValueError as exc:
            raise UsageError(str(exc))
    if key == ("cfrac", "root"):
        return cfrac.root_report(args.term, args.parity, args.n, args.quotients)
    if key == ("cfrac", "conjecture"):
        return cfrac.conjecture_report(args.n, args.quotients, parallel)
    if key == ("cfrac", "explore-even"):
        return cfrac.explore_even(args.n, args.quotients, parallel)
    raise UsageError(f"unknown command {args.group} {args.cmd}")


def render(report: Report, fmt: str, timing: bool) -> str:
    if fmt == "text":
        return report.to_text() + "\n"
    return report.to_json(include_timing=timing) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".nicomachus-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def execute(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return int(exc.code or 0)
    try:
        report = run(args)
    except UsageError as exc:
        print(f"nicomachus: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except cfrac.CertificationError as exc:
        print(f"nicomachus: certification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = render(report, args.format, args.timing == "on")
    sys.stdout.write(text)
    if args.out:
        write_atomic(args.out, text)
    return EXIT_OK if report.ok else EXIT_FAIL


def main() -> None:
    sys.exit(execute())
