"""Command-line front end.

Subcommands: eval, represent, classify, sweep, selftest.  Records go to
stdout, one JSON object per line (or CSV with a header); progress and
timing go to stderr so stdout is byte-identical for a given input whatever
the --jobs setting.  Exit codes: 0 ok, 1 mathematical mismatch, 2 bad
usage or input.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .closedform import vp_closed
from .cubicres import cubic_class, is_cubic_residue
from .errors import CubecountError
from .modarith import Prime, rational_mod
from .oracle import Domain, RationalMap, jacobsthal_brute, vp_brute
from .quadform import represent_a3b, represent_l27m
from .sweep import CHECKS, run_sweep

__all__ = ["main"]

ENV_MAX_P = "CUBECOUNT_MAX_P"


def _parse_a(text: str, p: int) -> int:
    """Parse the family parameter: an integer or a rational 'u/v'."""
    if "/" in text:
        u, _, v = text.partition("/")
        a = rational_mod(int(u), int(v), p)
    else:
        a = int(text) % p
    if a == 0:
        raise ValueError(f"a = {text} reduces to 0 mod {p}")
    return a


def _emit(records: list[dict], fmt: str, fields: tuple[str, ...] | None = None) -> None:
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if records:
            writer.writerow(records[0].keys())
        elif fields:
            writer.writerow(fields)
        for rec in records:
            writer.writerow(rec.values())
    else:
        for rec in records:
            sys.stdout.write(json.dumps(rec) + "\n")


def cmd_eval(args) -> int:
    p = Prime(args.p)
    a = _parse_a(args.a, p)
    got = vp_closed(a, p)
    rec = {
        "p": int(p),
        "a_reduced": a,
        "v_closed": got.v,
        "case": got.path_case,
        "A": got.A,
        "B": got.B,
    }
    code = 0
    if args.check:
        vb = vp_brute(RationalMap.x2_plus_a_over_x(a), p, Domain.NONZERO).v
        rec["v_brute"] = vb
        rec["match"] = got.v == vb
        if not rec["match"]:
            code = 1
    _emit([rec], args.format)
    return code


def cmd_represent(args) -> int:
    p = Prime(args.p)
    if p % 3 != 1:
        raise ValueError(f"p = {p} has no such representations (p != 1 mod 3)")
    quad = represent_a3b(p)
    eis = represent_l27m(p)
    _emit(
        [{"p": int(p), "A": quad.A, "B": quad.B, "L": eis.L, "M": eis.M}],
        args.format,
    )
    return 0


def cmd_classify(args) -> int:
    p = Prime(args.p)
    a = _parse_a(args.a, p)
    if p % 3 == 1:
        tag = cubic_class(a, p, represent_a3b(p)).name
    else:
        tag = None
    _emit(
        [{"p": int(p), "a": a, "class": tag, "is_cubic_residue": is_cubic_residue(a, p)}],
        args.format,
    )
    return 0


def cmd_sweep(args) -> int:
    max_p = args.max_p
    cap = os.environ.get(ENV_MAX_P)
    if cap is not None:
        max_p = min(max_p, int(cap))
    if max_p < 5:
        raise ValueError(f"--max-p {max_p}: no primes above 3 in range")
    if args.checks is None:
        names = list(CHECKS)
    else:
        names = [s for s in args.checks.split(",") if s]
        for name in names:
            if name not in CHECKS:
                raise ValueError(
                    f"unknown check {name!r} (choose from {','.join(CHECKS)})"
                )
    report = run_sweep(max_p, names, jobs=args.jobs)
    summary = {
        "prime_range": list(report.prime_range),
        "primes_checked": report.primes_checked,
        "pairs_checked": report.pairs_checked,
        "mismatches": len(report.mismatches),
        "checks": names,
    }
    if args.format == "csv":
        _emit(report.mismatches, "csv", fields=("check", "p", "a", "v_closed", "v_brute"))
        print(json.dumps(summary), file=sys.stderr)
    else:
        _emit(report.mismatches + [summary], "json")
    print(
        f"sweep: {report.primes_checked} primes, {report.pairs_checked} pairs, "
        f"{len(report.mismatches)} mismatches in {report.elapsed:.2f}s "
        f"(jobs={report.config['jobs']})",
        file=sys.stderr,
    )
    return 1 if report.mismatches else 0


def _selftest_vectors() -> list[tuple[str, object, object]]:
    """(description, got, want) rows over the embedded hand-checked values."""
    vecs: list[tuple[str, object, object]] = []
    for p, a, want in ((5, 1, 3), (7, 2, 3), (7, 1, 4)):
        vecs.append((f"vp_closed(a={a}, p={p})", vp_closed(a, p).v, want))
        vecs.append(
            (
                f"vp_brute(x^2+{a}/x, p={p})",
                vp_brute(RationalMap.x2_plus_a_over_x(a), p, Domain.NONZERO).v,
                want,
            )
        )
    for p, want_ab, want_lm in ((7, (-2, 1), (1, 1)), (13, (1, 2), (-5, 1))):
        quad = represent_a3b(p)
        eis = represent_l27m(p)
        vecs.append((f"represent_a3b({p})", (quad.A, quad.B), want_ab))
        vecs.append((f"represent_l27m({p})", (eis.L, eis.M), want_lm))
    vecs.append(
        (
            "vp_brute(x^2+4/x, p=7)",
            vp_brute(RationalMap.x2_plus_a_over_x(4), 7, Domain.NONZERO).v,
            6,
        )
    )
    vecs.append(("jacobsthal_brute(1, 7)", jacobsthal_brute(1, 7), 3))
    return vecs


def cmd_selftest(args) -> int:
    failures = 0
    for name, got, want in _selftest_vectors():
        if got == want:
            print(f"ok   {name} = {want}")
        else:
            print(f"FAIL {name}: got {got}, want {want}")
            failures += 1
    print(f"selftest: {failures} failure(s)")
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubecount",
        description="Residue counts of x^2 + a/x mod p: closed forms, "
        "enumeration, and verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument(
            "--format",
            choices=("json", "csv"),
            default="json",
            help="output format (default: json, one object per line)",
        )

    sp = sub.add_parser("eval", help="closed-form count of x^2 + a/x")
    sp.add_argument("--p", required=True, help="prime modulus (> 3)")
    sp.add_argument("--a", required=True, help="family parameter, int or u/v")
    sp.add_argument(
        "--check",
        action="store_true",
        help="also enumerate and compare (exit 1 on mismatch)",
    )
    add_format(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("represent", help="A,B and L,M for p = 1 (mod 3)")
    sp.add_argument("--p", required=True, help="prime = 1 (mod 3)")
    add_format(sp)
    sp.set_defaults(func=cmd_represent)

    sp = sub.add_parser("classify", help="cubic class of a mod p")
    sp.add_argument("--p", required=True, help="prime modulus (> 3)")
    sp.add_argument("--a", required=True, help="residue to classify, int or u/v")
    add_format(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("sweep", help="verify identities over all primes <= max-p")
    sp.add_argument("--max-p", type=int, required=True, help="sweep bound (>= 5)")
    sp.add_argument(
        "--checks",
        help="comma-separated subset of: " + ",".join(CHECKS) + " (default: all)",
    )
    sp.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes (default: all cores); output does not depend on it",
    )
    add_format(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("selftest", help="run the embedded hand-checked vectors")
    add_format(sp)
    sp.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CubecountError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
