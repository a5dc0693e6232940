"""Command line interface: ``apd {gen,compute,m1,verify,verify-all,pte}``.

Exit codes: 0 all matched, 1 mismatch inside the verified range,
2 usage or domain error, 3 an inconclusive search was encountered.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import Outcome, apd_sequence, default_m_cap, first_appearance
from .errors import ApdError
from .matrices import Family, FamilySpec, dumps_matrix, load_matrix
from .numeric import fmt_exact
from .permutations import DEFAULT_MAX_ORDER, default_workers, signed_value_histogram
from .pte import extract_multisets, pte_degree, pte_to_json
from .verify import reports_to_csv, reports_to_json, verify_all, verify_family

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

CLI_FAMILIES = [f.value for f in Family]


def _shift(text):
    if text == "n":
        return "n"
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"d must be an integer or 'n', got {text!r}") from None


def _add_family_args(p, with_n=True, required=False):
    p.add_argument("--family", choices=CLI_FAMILIES, required=required)
    if with_n:
        p.add_argument("--n", type=int)
    p.add_argument("--d", type=_shift, help="row shift for the shifted family (integer or 'n')")
    p.add_argument("--r", type=int, help="exponent for the shifted and mult families")
    p.add_argument("--nodes", nargs="+", help="nodes for vandermonde-nodes (integers or p/q)")


def _add_run_args(p):
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $APD_THREADS or 1)")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                   help="refuse to enumerate S_n above this order")


def _spec(args) -> FamilySpec:
    fam = Family(args.family)
    d = args.d
    r = args.r
    if fam is Family.SHIFTED:
        d = 1 if d is None else d
        r = 2 if r is None else r
    elif fam is Family.MULT:
        r = 1 if r is None else r
    nodes = tuple(args.nodes) if args.nodes else None
    return FamilySpec(fam, d=d, r=r, nodes=nodes)


def _matrix(args, parser):
    if getattr(args, "matrix", None):
        if args.family:
            parser.error("give either --family or --matrix, not both")
        return load_matrix(args.matrix)
    if not args.family or args.n is None:
        parser.error("need --family with --n, or --matrix")
    return _spec(args).build(args.n)


def _threads(args) -> int:
    return args.threads if args.threads else default_workers()


def _histogram(args, matrix):
    k = _threads(args)
    return signed_value_histogram(matrix, partitions=k, workers=k, max_order=args.max_order)


def _write(path, text):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args, parser):
    if not args.family or args.n is None:
        parser.error("gen needs --family and --n")
    matrix = _spec(args).build(args.n)
    _write(args.out, dumps_matrix(matrix, args.format))
    return EXIT_OK


def cmd_compute(args, parser):
    matrix = _matrix(args, parser)
    hist = _histogram(args, matrix)
    if args.histogram:
        Path(args.histogram).write_text(json.dumps(hist.to_json(), indent=2) + "\n")
    values = apd_sequence(hist, args.m)
    if args.all:
        for m, v in enumerate(values, 1):
            print(f"{m}\t{fmt_exact(v)}")
    else:
        print(fmt_exact(values[-1]))
    return EXIT_OK


def cmd_m1(args, parser):
    matrix = _matrix(args, parser)
    result = first_appearance(_histogram(args, matrix), args.m_cap)
    print(json.dumps({
        "n": matrix.n,
        "outcome": result.outcome.value,
        "m1": result.m1_text(),
        "value": result.value_text(),
        "zero_through": result.zero_through,
        "m_cap": result.cap,
    }))
    return EXIT_INCONCLUSIVE if result.outcome is Outcome.INCONCLUSIVE else EXIT_OK


def _exit_for(reports):
    if any(r.mismatches for r in reports):
        return EXIT_MISMATCH
    if any(r.inconclusive for r in reports):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _summary(reports):
    for rep in reports:
        for row in rep.rows:
            flag = "ok " if row.match else ("?? " if row.beyond_verified_range else "BAD")
            print(f"{flag} {rep.family.label:<16} n={row.n:<3} m1={row.m1_computed!s:<4} "
                  f"value={row.value_computed}", file=sys.stderr)


def cmd_verify(args, parser):
    if args.n_min is None or args.n_max is None:
        parser.error("verify needs --n-min and --n-max")
    spec = _spec(args)
    canonical = f"apd verify --family {spec.family.value}"
    if spec.d is not None:
        canonical += f" --d {spec.d}"
    if spec.r is not None:
        canonical += f" --r {spec.r}"
    canonical += f" --n-min {args.n_min} --n-max {args.n_max}"
    if args.m_cap:
        canonical += f" --m-cap {args.m_cap}"
    report = verify_family(spec, args.n_min, args.n_max, m_cap=args.m_cap,
                           threads=_threads(args), max_order=args.max_order,
                           command_line=canonical)
    _summary([report])
    if args.json:
        Path(args.json).write_text(reports_to_json([report]))
    if args.csv:
        Path(args.csv).write_text(reports_to_csv([report]))
    return _exit_for([report])


def cmd_verify_all(args, parser):
    reports = verify_all(args.profile, threads=default_workers(), max_order=args.max_order,
                         command_line=f"apd verify-all --profile {args.profile}")
    _summary(reports)
    if args.json:
        Path(args.json).write_text(reports_to_json(reports, args.profile))
    if args.csv:
        Path(args.csv).write_text(reports_to_csv(reports))
    return _exit_for(reports)


def cmd_pte(args, parser):
    matrix = _matrix(args, parser)
    pair = extract_multisets(_histogram(args, matrix))
    degree = pte_degree(pair, args.k_cap or default_m_cap(matrix.n))
    _write(args.out, json.dumps(pte_to_json(pair, degree), indent=2) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family matrix as JSON or CSV")
    _add_family_args(p)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("compute", help="print APD_m")
    _add_family_args(p)
    p.add_argument("--matrix", help="matrix file (.json or .csv)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--all", action="store_true", help="print APD_1 .. APD_m")
    p.add_argument("--histogram", help="also export the signed histogram to this JSON file")
    _add_run_args(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("m1", help="search for the first appearance degree")
    _add_family_args(p)
    p.add_argument("--matrix")
    p.add_argument("--m-cap", type=int)
    _add_run_args(p)
    p.set_defaults(func=cmd_m1)

    p = sub.add_parser("verify", help="compare one family against its closed form")
    _add_family_args(p, with_n=False, required=True)
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--m-cap", type=int)
    p.add_argument("--json")
    p.add_argument("--csv")
    _add_run_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="run a verification profile")
    p.add_argument("--profile", choices=("smoke", "desk", "extended"), default="smoke")
    p.add_argument("--json")
    p.add_argument("--csv")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("pte", help="export even/odd value multisets")
    _add_family_args(p)
    p.add_argument("--matrix")
    p.add_argument("--out")
    p.add_argument("--k-cap", type=int, default=None)
    _add_run_args(p)
    p.set_defaults(func=cmd_pte)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (ApdError, ValueError, OSError) as exc:
        print(f"apd: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
