"""Command-line entry point: plot --figure <id> --csv <path> --out <path>."""

import argparse
import sys
from pathlib import Path

from .figures import FIGURES, FigureSpec, SchemaMismatchError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot", description="Render a sweep figure from a screenant summary.csv"
    )
    parser.add_argument("--figure", required=True, choices=sorted(FIGURES))
    parser.add_argument("--csv", required=True, help="input summary.csv")
    parser.add_argument("--out", required=True, help="output image path (SVG + PNG written)")
    parser.add_argument("--with-oracle", action="store_true", help="add the closed-form optimum line")
    parser.add_argument(
        "--share-axes-with", metavar="CSV", default=None,
        help="second summary.csv whose data range widens this figure's axes",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(
            figure=args.figure,
            csv_path=Path(args.csv),
            out_path=Path(args.out),
            with_oracle=args.with_oracle,
            share_csv=None if args.share_axes_with is None else Path(args.share_axes_with),
        )
        result = render(spec)
    except (SchemaMismatchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {result.svg_path} and {result.png_path} ({result.n_points} points per line)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
