"""Command-line front end.

Exit codes: 0 success, 1 invariant violation, 2 invalid input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys

from .analysis import DEFAULT_OFFSET, calibrate, evaluate_point, sweep, verify_f_min
from .emulator import iter_fixed
from .errors import FPGroverError, InvalidInputError, ResourceLimitError
from .reference import GroverParams
from .report import format_number, write_records
from .statevector import MAX_N_ENV, validate_two_value

EXIT_OK, EXIT_VIOLATION, EXIT_INVALID, EXIT_IO = 0, 1, 2, 3

log = logging.getLogger("fpgrover")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--out", help="output file (default: stdout)")
    out.add_argument("--format", choices=("csv", "json"), default="csv")

    p = _Parser(prog="fpgrover", description="Fixed-point Grover emulation and truncation-error analysis.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("emulate", parents=[out], help="run one (n, f, n_s) point")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--f", type=int, required=True)
    e.add_argument("--ns", type=int, default=1)

    s = sub.add_parser("sweep", parents=[out], help="run a grid of points")
    s.add_argument("--n-list", type=int, nargs="+", default=[8, 12, 16])
    s.add_argument("--f", type=int, nargs=2, metavar=("F_LO", "F_HI"), default=[16, 40])
    s.add_argument("--ns", type=int, default=1)
    s.add_argument("--workers", type=int, default=1)

    m = sub.add_parser("fmin", parents=[out], help="minimal fractional bits for an error target")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--l2max", type=float, required=True)
    m.add_argument("--ns", type=int, default=1)
    m.add_argument("--offset", type=float, default=DEFAULT_OFFSET)

    v = sub.add_parser("validate", parents=[out], help="check the two-value structure on full state vectors")
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--placements", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)

    c = sub.add_parser("calibrate", parents=[out], help="fit the offset constant at one anchor point")
    c.add_argument("--n", type=int, default=12)
    c.add_argument("--f", type=int, default=28)
    c.add_argument("--ns", type=int, default=1)
    c.add_argument("--l2", type=float, help="anchor l2 (default: computed at (n, f))")
    return p


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit_mapping(rows: list[dict], stream, fmt: str) -> None:
    if fmt == "json":
        stream.write(json.dumps(rows, indent=2) + "\n")
        return
    cols = list(rows[0])
    stream.write(",".join(cols) + "\n")
    for row in rows:
        stream.write(",".join(format_number(row[c]) for c in cols) + "\n")


def _cmd_emulate(args) -> int:
    GroverParams(args.n, args.f, args.ns)
    rec = evaluate_point(args.n, args.f, args.ns)
    with _output(args.out) as fh:
        write_records([rec], fh, args.format)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    lo, hi = args.f
    if lo > hi:
        raise InvalidInputError(f"inverted f range: F_LO={lo} > F_HI={hi}")
    if lo < 1:
        raise InvalidInputError(f"f must be >= 1 (got F_LO={lo})")
    records = sweep(args.n_list, range(lo, hi + 1), args.ns, workers=args.workers)
    with _output(args.out) as fh:
        write_records(records, fh, args.format)
    failed = [r for r in records if not r.ok]
    for r in failed:
        print(f"point n={r.n} f={r.f}: {r.error}", file=sys.stderr)
    return EXIT_INVALID if failed else EXIT_OK


def _cmd_fmin(args) -> int:
    check = verify_f_min(args.n, args.l2max, args.ns, args.offset)
    row = {
        "n": check.n,
        "l2_max": check.l2_max,
        "f_min": check.f_min,
        "achieved_l2": check.achieved_l2,
        "pass": check.passed,
    }
    with _output(args.out) as fh:
        _emit_mapping([row], fh, args.format)
    return EXIT_OK if check.passed else EXIT_VIOLATION


def _cmd_validate(args) -> int:
    if args.max_n < 1:
        raise InvalidInputError(f"--max-n must be >= 1 (got {args.max_n})")
    summary = validate_two_value(args.max_n, placements=args.placements, seed=args.seed)
    trace = [s.mantissas for s in iter_fixed(GroverParams(2, 10, 1))]
    print(f"trace n=2 f=10 n_s=1 (S, NS) mantissas: {trace}", file=sys.stderr)
    for line in summary.violations:
        print(line, file=sys.stderr)
    row = {
        "max_n": args.max_n,
        "points": summary.points,
        "states": summary.states,
        "violations": len(summary.violations),
    }
    with _output(args.out) as fh:
        _emit_mapping([row], fh, args.format)
    print(f"{summary.points} points, {summary.states} states checked, "
          f"{len(summary.violations)} violations", file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def _cmd_calibrate(args) -> int:
    if args.l2 is None:
        rec = evaluate_point(args.n, args.f, args.ns)
        result = calibrate(rec)
    else:
        result = calibrate((args.n, args.f, args.l2))
    n, f, l2 = result.anchor
    row = {"n": n, "f": f, "l2": l2, "offset_c": result.offset_c, "offset_c_2dp": f"{result.offset_c:.2f}"}
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(json.dumps([row], indent=2) + "\n")
        else:
            fh.write(",".join(row) + "\n")
            fh.write(",".join(v if isinstance(v, str) else format_number(v) for v in row.values()) + "\n")
    return EXIT_OK


COMMANDS = {
    "emulate": _cmd_emulate,
    "sweep": _cmd_sweep,
    "fmin": _cmd_fmin,
    "validate": _cmd_validate,
    "calibrate": _cmd_calibrate,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: {exc}; raise the cap via ${MAX_N_ENV}", file=sys.stderr)
        return EXIT_INVALID
    except (InvalidInputError, FPGroverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
