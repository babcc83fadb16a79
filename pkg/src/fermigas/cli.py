"""Command-line interface.

    fermigas figure <1|2|3|4> [--out DIR] [--grid N] [--base B]
                              [--xmax X] [--eps E]
    fermigas sweep --spec FILE --out DIR
    fermigas analyze --spec FILE

Exit codes: 0 success, 1 every output row degenerate, 2 invalid
specification or flags.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from pathlib import Path

from . import __version__
from .runner import (
    ScenarioError,
    SweepResult,
    analyze_configuration,
    load_scenario,
    run_figure,
    run_scenario,
)
from .wick import DegenerateConfiguration

EXIT_OK = 0
EXIT_DEGENERATE = 1
EXIT_INVALID = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermigas",
        description="Spin entanglement of the ideal Fermi gas: figure "
                    "datasets, scenario sweeps, single-configuration reports.")
    parser.add_argument("--version", action="version",
                        version=f"fermigas {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="compute one of the standard figures")
    fig.add_argument("id", type=int, choices=(1, 2, 3, 4))
    fig.add_argument("--out", default=".", metavar="DIR",
                     help="output directory (default: current directory)")
    fig.add_argument("--grid", type=int, default=None, metavar="N",
                     help="number of grid points")
    fig.add_argument("--base", type=float, default=None, metavar="B",
                     help="triangle base length (figure 2)")
    fig.add_argument("--xmax", type=float, default=None, metavar="X",
                     help="sweep upper bound")
    fig.add_argument("--eps", type=float, default=None, metavar="E",
                     help="smallest edge for n >= 3 coincident limits")

    sw = sub.add_parser("sweep", help="run a scenario file")
    sw.add_argument("--spec", required=True, metavar="FILE")
    sw.add_argument("--out", required=True, metavar="DIR")

    an = sub.add_parser("analyze",
                        help="print the entanglement report of one configuration")
    an.add_argument("--spec", required=True, metavar="FILE")
    return parser


def _write_outputs(result: SweepResult, out_dir: str, stem: str) -> int:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / f"{stem}.csv"
    result.write_csv(csv_path)
    report = result.report_dict()
    report["metadata"]["generated_at"] = (
        datetime.datetime.now(datetime.timezone.utc).isoformat())
    json_path = out / f"{stem}_report.json"
    json_path.write_text(json.dumps(report, indent=2) + "\n")
    print(f"wrote {csv_path}")
    print(f"wrote {json_path}")
    if result.all_degenerate:
        print("warning: every row is degenerate", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "figure":
            result = run_figure(args.id, grid=args.grid, xmax=args.xmax,
                                base=args.base, eps=args.eps)
            return _write_outputs(result, args.out, f"figure{args.id}")
        if args.command == "sweep":
            spec = load_scenario(args.spec)
            result = run_scenario(spec)
            return _write_outputs(result, args.out, Path(args.spec).stem)
        # analyze
        with open(args.spec) as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ScenarioError(
                    f"{args.spec}: invalid JSON at line {exc.lineno}, "
                    f"column {exc.colno}: {exc.msg}") from exc
        if not isinstance(raw, dict):
            raise ScenarioError(f"{args.spec}: top level must be a JSON object")
        report = analyze_configuration(raw, source=str(args.spec))
        print(json.dumps(report, indent=2))
        return EXIT_OK
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DegenerateConfiguration as exc:
        print(f"error: degenerate configuration: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
