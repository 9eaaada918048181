"""Command-line front end.

Subcommands: gen-dims, check-0apn, check-apn, classify, scan, verify.
Exit codes: 0 success, 1 verification mismatch, 2 configuration error,
3 I/O error.
"""

import argparse
import json
import os
import sys

from .exponents import ReducedExponent, weight
from .exponents import reduce_value
from .families import classify, coset_min
from .field import Field
from .records import write_csv, write_json
from .scan import scan_table, table_rows
from .theorems import SUITE_IDS, run_suite
from .zero_apn import (
    CONDITIONS, DEFAULT_SCAN_CAP, THEOREM, generate_dims, is_zero_apn_exact,
)
from .apn import diff_spectrum_monomial


def _parse_range(text):
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi or lo < 1:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def _default_workers():
    try:
        return max(1, int(os.environ.get("APNFORGE_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser():
    top = argparse.ArgumentParser(
        prog="apnforge",
        description="0-APN / APN analysis of x^e(l,k) monomials over GF(2^n)",
    )
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-dims", help="dimensions where x^e(l,k) is 0-APN")
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--k", "--i", dest="k", type=int, required=True)
    g.add_argument("--n-max", type=int, required=True)
    g.add_argument("--n-min", type=int, default=1)
    g.add_argument("--condition", choices=CONDITIONS, default=THEOREM)
    g.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP)
    g.add_argument("--out", default=None)

    for name in ("check-0apn", "check-apn"):
        c = sub.add_parser(name, help=f"{name[6:].upper()} verdict for x^d over GF(2^n)")
        c.add_argument("d", help="exponent, decimal")
        c.add_argument("n", type=int)
        c.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP)

    c = sub.add_parser("classify", help="family classification of x^d over GF(2^n)")
    c.add_argument("d", help="exponent, decimal")
    c.add_argument("n", type=int)

    s = sub.add_parser("scan", help="bulk (l, i, n) APN scan")
    s.add_argument("--l", type=_parse_range, required=True, metavar="A:B")
    s.add_argument("--i", "--k", dest="i", type=_parse_range, required=True,
                   metavar="A:B")
    s.add_argument("--n", type=_parse_range, required=True, metavar="A:B")
    s.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP)
    s.add_argument("--workers", type=int, default=None)
    s.add_argument("--out", default=None)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--checkpoint", default=None)
    s.add_argument("--cell-budget", type=float, default=None, metavar="SECONDS")

    v = sub.add_parser("verify", help="run a theorem-verification suite")
    v.add_argument("suite", choices=SUITE_IDS)
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--t-max", type=int, default=None)
    v.add_argument("--out", default=None)
    return top


def cmd_gen_dims(args):
    if args.n_max < args.n_min:
        print("error: empty dimension range", file=sys.stderr)
        return 2
    dims = generate_dims(args.l, args.k, args.n_min, args.n_max,
                         condition=args.condition, scan_cap=args.scan_cap)
    body = "".join(f"{n}\n" for n in dims)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    print(f"count: {len(dims)}")
    return 0


def cmd_check_0apn(args):
    verdict = is_zero_apn_exact(int(args.d), Field(args.n), scan_cap=args.scan_cap)
    print(json.dumps({
        "exponent": str(verdict.exponent), "n": verdict.n,
        "is_zero_apn": verdict.is_zero_apn,
        "nontrivial_root_count": verdict.nontrivial_root_count,
        "method": verdict.method,
    }))
    return 0


def cmd_check_apn(args):
    spec = diff_spectrum_monomial(int(args.d), Field(args.n), scan_cap=args.scan_cap)
    print(json.dumps({
        "exponent": str(spec.exponent), "n": spec.n,
        "apn": spec.uniformity == 2, "uniformity": spec.uniformity,
        "histogram": {str(k): v for k, v in sorted(spec.histogram.items())},
    }))
    return 0


def cmd_classify(args):
    d = int(args.d)
    if d < 1:
        print("error: exponent must be >= 1", file=sys.stderr)
        return 2
    n = args.n
    red = reduce_value(d, n)
    matches = classify(d, n)
    print(json.dumps({
        "exponent": str(red), "n": n,
        "coset_min": str(coset_min(d, n)),
        "weight": weight(ReducedExponent(red, n)),
        "families": [{
            "family": inst.family, "param": inst.param,
            "exponent": str(inst.exponent), "label": inst.label(),
            "witness": {"kind": w.kind, "a": w.a, "details": w.details},
        } for inst, w in matches],
    }, indent=1))
    return 0


def cmd_scan(args):
    workers = args.workers if args.workers is not None else _default_workers()
    records = scan_table(args.l, args.i, args.n, scan_cap=args.scan_cap,
                         workers=workers, checkpoint=args.checkpoint,
                         cell_budget=args.cell_budget,
                         log=lambda msg: print(msg, file=sys.stderr))
    for (l, i), dims in table_rows(records).items():
        print(f"l={l} i={i}: {','.join(map(str, dims)) if dims else '-'}")
    if args.out:
        (write_csv if args.format == "csv" else write_json)(records, args.out)
    return 0


def cmd_verify(args):
    bounds = {}
    if args.suite == "welch" and args.t_max:
        bounds["t_max"] = args.t_max
    if args.suite == "niho" and args.t_max:
        bounds["t_max"] = args.t_max
    if args.suite in ("kasami-inverse", "dobbertin", "dobbertin-inverse") and args.n_max:
        bounds["n_max"] = args.n_max
    if args.suite == "kasami" and args.t_max:
        bounds["t_max"] = args.t_max
    reports = run_suite(args.suite, **bounds)
    ok = True
    for rep in reports:
        print(f"{rep.suite}: {'PASS' if rep.ok else 'FAIL'}")
        for msg in rep.failures:
            print(f"  {msg}")
        ok = ok and rep.ok
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_json_dict() for r in reports], fh, indent=1)
            fh.write("\n")
    return 0 if ok else 1


_COMMANDS = {
    "gen-dims": cmd_gen_dims,
    "check-0apn": cmd_check_0apn,
    "check-apn": cmd_check_apn,
    "classify": cmd_classify,
    "scan": cmd_scan,
    "verify": cmd_verify,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
