"""plotfig command line: ``plotfig <csv...> --out fig1.svg [--styles ...] [--inset auto|off]``."""

import argparse
import sys

from . import SweepCsvError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotfig",
        description="Render discord-versus-q sweep CSVs as one static figure "
        "with a zoom inset on the negative region.",
    )
    parser.add_argument("csv", nargs="+", help="sweep CSV files (header 'q,discord')")
    parser.add_argument("--out", default="fig1.svg", help="output image (.svg or .png)")
    parser.add_argument("--styles", default=None,
                        help="comma-separated line styles, e.g. solid,dashed")
    parser.add_argument("--inset", choices=("auto", "off"), default="auto")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    styles = args.styles.split(",") if args.styles else None
    try:
        out = render(args.csv, styles=styles, inset=args.inset, out=args.out)
    except SweepCsvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
