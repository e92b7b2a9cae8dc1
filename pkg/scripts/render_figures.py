#!/usr/bin/env python3
"""Render all five figures to SVG files in an output directory."""

import argparse
import pathlib

from zdgeom import FigureSpec, render_figure


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", type=float, default=1.0)
    parser.add_argument("--b", type=float, default=1.0)
    parser.add_argument("--out-dir", default="figures")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for figure_id in (1, 2, 3, 4, 5):
        spec = FigureSpec(figure_id=figure_id, a=args.a, b=args.b)
        path = out_dir / f"figure{figure_id}.svg"
        path.write_text(render_figure(spec))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
