"""Command-line front end: ``ribbons <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 invalid instance, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from . import generator, verify
from .polynomial import poly_eval_one, poly_format
from .shapes import NotAPartition, SkewShape, compositions, parse_partition
from .tableau import HeadArray, InvalidCoding, RibbonTableau, decode_with_spin, encode, render_text, tableau_weight, validate

EXIT_USAGE, EXIT_INVALID, EXIT_VERIFY = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _weight(text: str) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight {text!r}") from None
    if any(x <= 0 for x in w):
        raise argparse.ArgumentTypeError("weight entries must be positive")
    return w


def _partition(text: str):
    try:
        return parse_partition(text)
    except NotAPartition as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _shape_args(p, weight=True, required=True):
    p.add_argument("--outer", type=_partition, required=required, help="outer partition, e.g. 8,7,6,5,1")
    p.add_argument("--inner", type=_partition, default=(), help="inner partition (default empty)")
    p.add_argument("--ribbon", "-k", type=int, required=True, help="ribbon length k")
    if weight:
        p.add_argument("--weight", type=_weight, required=required, help="weight, e.g. 3,3,2,1")
    p.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ribbons", description="k-ribbon tableaux and spin polynomials")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spin-poly", help="spin (or cospin) polynomial")
    _shape_args(p)
    p.add_argument("--cospin", action="store_true")
    p.add_argument("--no-memo", action="store_true")
    p.add_argument("--format", choices=["plain", "latex", "json"], default="plain")

    p = sub.add_parser("count", help="number of tableaux")
    _shape_args(p)
    p.add_argument("--no-memo", action="store_true")

    p = sub.add_parser("generate", help="list every tableau")
    _shape_args(p)
    p.add_argument("--limit", type=int, default=0, help="stop after N tableaux (0 = no limit)")
    p.add_argument("--format", choices=["json", "ascii", "matrix"], default="json")
    p.add_argument("--orientation", choices=["top-down", "bottom-up"], default="top-down")

    p = sub.add_parser("stats", help="search-tree level statistics as CSV")
    _shape_args(p)

    p = sub.add_parser("max-spin", help="maximal spin over all tilings")
    _shape_args(p, weight=False)

    p = sub.add_parser("decode", help="decode a head-array matrix file")
    p.add_argument("--matrix", required=True, help="text file (one row per line) or .json")
    p.add_argument("--ribbon", "-k", type=int, help="ribbon length (required for text files)")
    p.add_argument("--orientation", choices=["top-down", "bottom-up"], default="top-down")

    p = sub.add_parser("encode", help="head array of a tableau given as JSON")
    p.add_argument("--tableau", required=True, help="JSON file with k, outer, inner, ribbons")
    p.add_argument("--orientation", choices=["top-down", "bottom-up"], default="top-down")
    p.add_argument("--format", choices=["matrix", "json"], default="matrix")

    p = sub.add_parser("verify", help="compare the generator with brute force")
    _shape_args(p, required=False)
    p.add_argument("--max-cells", type=int, default=9)
    p.add_argument("--no-memo", action="store_true")
    p.add_argument("--poly-only", action="store_true", help="skip the tableau-set comparison")
    return parser


def _shape(args) -> SkewShape:
    return SkewShape(args.outer, args.inner)


def cmd_spin_poly(args, out) -> int:
    fn = generator.cospin_polynomial if args.cospin else generator.spin_polynomial
    poly = fn(_shape(args), args.ribbon, args.weight, memoized=not args.no_memo, workers=args.parallel)
    print(poly_format(poly, args.format), file=out)
    return 0


def cmd_count(args, out) -> int:
    poly = generator.spin_polynomial(
        _shape(args), args.ribbon, args.weight, memoized=not args.no_memo, workers=args.parallel
    )
    print(poly_eval_one(poly), file=out)
    return 0


def cmd_generate(args, out) -> int:
    stream = generator.enumerate_tableaux(_shape(args), args.ribbon, args.weight, workers=args.parallel)
    if args.limit > 0:
        stream = islice(stream, args.limit)
    for i, (array, spin2) in enumerate(stream):
        if args.format == "json":
            print(json.dumps({"heads": [list(r) for r in array.rows], "spin2": spin2}), file=out)
        elif args.format == "matrix":
            if i:
                print(file=out)
            print(array.to_text(args.orientation), file=out)
        else:
            if i:
                print(file=out)
            print(f"# spin {spin2}/2", file=out)
            print(render_text(decode_with_spin(array)[0], args.orientation), file=out)
    return 0


def cmd_stats(args, out) -> int:
    st = generator.level_stats(_shape(args), args.ribbon, args.weight, workers=args.parallel)
    print(",".join(map(str, st.nodes)), file=out)
    print(",".join(map(str, st.distinct_shapes)), file=out)
    return 0


def cmd_max_spin(args, out) -> int:
    print(generator.max_spin2(_shape(args), args.ribbon), file=out)
    return 0


def _spin_text(spin2: int) -> str:
    return str(spin2 // 2) if spin2 % 2 == 0 else f"{spin2}/2"


def cmd_decode(args, out) -> int:
    with open(args.matrix) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        array = HeadArray.from_json(text)
        if args.orientation == "bottom-up":
            array = HeadArray(array.rows[::-1], array.k)
    else:
        if args.ribbon is None:
            raise _UsageError("--ribbon is required for text matrices")
        array = HeadArray.from_text(text, args.ribbon, args.orientation)
    tab, spin2 = decode_with_spin(array)
    print(render_text(tab, args.orientation), file=out)
    print(f"shape: {tab.shape}", file=out)
    print(f"weight: {','.join(map(str, tableau_weight(tab)))}", file=out)
    print(f"spin: {_spin_text(spin2)}", file=out)
    return 0


def cmd_encode(args, out) -> int:
    with open(args.tableau) as fh:
        tab = RibbonTableau.from_json(fh.read())
    diag = validate(tab)
    if not diag:
        print(f"invalid tableau (label {diag.label}): {diag.reason}", file=sys.stderr)
        return EXIT_INVALID
    array = encode(tab)
    print(array.to_json() if args.format == "json" else array.to_text(args.orientation), file=out)
    return 0


def verify_instances(max_cells: int, ks, outer=None, inner=(), weight=None):
    """The instances ``verify`` checks: one given instance, or every small skew shape."""
    if outer is None:
        yield from verify.small_instances(max_cells, ks)
        return
    shape = SkewShape(outer, inner)
    for k in ks:
        if len(shape) % k:
            continue
        for w in [weight] if weight else compositions(len(shape) // k):
            yield shape, k, w


def cmd_verify(args, out) -> int:
    checked = mismatches = 0
    for shape, k, w in verify_instances(args.max_cells, [args.ribbon], args.outer, args.inner, args.weight):
        checked += 1
        bad = verify.compare(shape, k, w, sets=not args.poly_only, memoized=not args.no_memo)
        if bad is not None:
            mismatches += 1
            print(f"MISMATCH {bad}", file=out)
    print(f"checked {checked} instances, {mismatches} mismatches", file=out)
    return EXIT_VERIFY if mismatches else 0


class _UsageError(Exception):
    pass


COMMANDS = {
    "spin-poly": cmd_spin_poly,
    "count": cmd_count,
    "generate": cmd_generate,
    "stats": cmd_stats,
    "max-spin": cmd_max_spin,
    "decode": cmd_decode,
    "encode": cmd_encode,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "ribbon", 1) is not None and getattr(args, "ribbon", 1) < 1:
        print("ribbons: error: --ribbon must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(f"ribbons: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (generator.ShapeWeightMismatch, generator.NoTiling, InvalidCoding, NotAPartition, ValueError, OSError) as exc:
        print(f"ribbons: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
