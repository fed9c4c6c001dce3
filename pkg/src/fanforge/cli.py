"""Command line front end.

Input files are JSON objects with either a "V" entry (the fan matrix,
row-major) or a "Q" entry (a weight matrix, from which the fan matrix is
computed as a Gale dual).  Reports go to stdout or --output and are
byte-identical across runs; timings are printed to stderr only.

    fanforge validate  --input matrix.json
    fanforge sf        --input matrix.json [--no-overlap-check]
    fanforge psf       --input matrix.json [--threads N]
    fanforge compare   --input matrix.json [--fiber-bound N]
    fanforge plot      --input matrix.json --output picture.svg
    fanforge family    --p P --q Q
    fanforge conjecture --input matrix.json
"""

import argparse
import json
import sys
import time

from .fans import AxiomViolation, enumerate_sf, validate_fan_matrix
from .gale import family_matrices, gale_dual, weight_matrix_from_rows
from .plot import UnsupportedRank, secondary_fan_svg
from .report import (
    conjecture_report,
    fan_report,
    render_report,
    report_checks_pass,
    validation_report,
)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="fanforge",
        description="Enumerate complete simplicial fans on a fixed ray set "
        "and analyse their projectivity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "sf", "psf", "compare", "plot", "conjecture"):
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="JSON file with 'V' or 'Q'")
        _common_flags(p)
    fam = sub.add_parser("family")
    fam.add_argument("--p", type=int, required=True)
    fam.add_argument("--q", type=int, required=True)
    _common_flags(fam)
    return parser


def _common_flags(p):
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--no-overlap-check", action="store_true",
                   help="skip the pairwise interior-overlap verification")
    p.add_argument("--fiber-bound", type=int, default=6,
                   help="exponent-sum bound for the fiber-minima cross-check")
    p.add_argument("--threads", type=int, default=1)


def _load_matrix(path):
    with open(path) as fh:
        data = json.load(fh)
    if "V" in data:
        V = validate_fan_matrix(data["V"])
        return V
    if "Q" in data:
        _, V = weight_matrix_from_rows([tuple(r) for r in data["Q"]])
        return V
    raise ValueError("input JSON must contain 'V' or 'Q'")


def _write(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        exit_code = _dispatch(args)
    except (AxiomViolation, UnsupportedRank) as exc:
        print(f"fanforge: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"fanforge: {exc}", file=sys.stderr)
        return 2
    print(
        f"fanforge: {args.command} finished in {time.monotonic() - started:.2f}s",
        file=sys.stderr,
    )
    return exit_code


def _dispatch(args):
    if args.command == "family":
        Q, V = family_matrices(args.p, args.q)
        report = fan_report(
            V,
            "compare",
            verify_overlap=not args.no_overlap_check,
            fiber_bound=args.fiber_bound,
            threads=args.threads,
        )
        report["command"] = "family"
        report["family"] = {"p": args.p, "q": args.q}
        _write(render_report(report, args.format), args.output)
        return 0 if report_checks_pass(report) else 1

    V = _load_matrix(args.input)

    if args.command == "validate":
        report = validation_report(V)
        _write(render_report(report, args.format), args.output)
        return 0

    if args.command == "plot":
        Q = gale_dual(V)
        fans = enumerate_sf(V, verify_overlap=not args.no_overlap_check)
        _write(secondary_fan_svg(Q, fans), args.output)
        return 0

    if args.command == "conjecture":
        report = conjecture_report(V)
        _write(render_report(report, args.format), args.output)
        return 0 if not report["counterexamples"] else 1

    report = fan_report(
        V,
        args.command,
        verify_overlap=not args.no_overlap_check,
        fiber_bound=args.fiber_bound if args.command == "compare" else None,
        threads=args.threads,
    )
    _write(render_report(report, args.format), args.output)
    return 0 if report_checks_pass(report) else 1


if __name__ == "__main__":
    sys.exit(main())
