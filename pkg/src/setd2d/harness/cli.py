"""Command-line interface.

Exit codes: 0 success, 1 configuration error, 2 runtime error.
"""
import argparse
import dataclasses
import sys

from .config import ConfigError, default_out_dir, load_scenario
from .plotdata import PlotDataError, emit_plot_data
from .runner import collect_summaries, run_and_write, sweep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setd2d",
        description="Trust-aware secure D2D multicast relay simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one scenario")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--out", default=None)

    p_sweep = sub.add_parser("sweep", help="run a parameter sweep")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--param", required=True)
    p_sweep.add_argument("--values", required=True,
                         help="comma-separated values")
    p_sweep.add_argument("--out", default=None)

    p_plot = sub.add_parser("plot-data", help="emit figure series files")
    p_plot.add_argument("--results", default=None,
                        help="results directory (sweep-driven figures)")
    p_plot.add_argument("--figure", required=True)
    p_plot.add_argument("--out", default=None)

    p_val = sub.add_parser("validate", help="validate a config file")
    p_val.add_argument("--config", required=True)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "validate":
            load_scenario(args.config)
            print("ok")
            return 0
        if args.command == "run":
            scenario = load_scenario(args.config)
            if args.seed is not None:
                scenario = dataclasses.replace(scenario, seed=args.seed)
            out = args.out or default_out_dir()
            result = run_and_write(scenario, out)
            s = result.summary()
            print(f"frames={s['frames']} "
                  f"mean_non_corrupted_kbits={s['mean_non_corrupted_kbits']:.2f} "
                  f"mean_wasted_pct={s['mean_wasted_pct']:.2f} "
                  f"malicious_selection_pct={s['malicious_selection_pct']:.1f}")
            print(f"results written to {out}")
            return 0
        if args.command == "sweep":
            scenario = load_scenario(args.config)
            out = args.out or default_out_dir()
            results = sweep(scenario, args.param, args.values.split(","), out)
            print(f"{len(results)} runs written to {out}")
            return 0
        if args.command == "plot-data":
            out = args.out or default_out_dir()
            summaries = (collect_summaries(args.results)
                         if args.results else None)
            paths = emit_plot_data(args.figure, out, summaries)
            for p in paths:
                print(p)
            return 0
        raise AssertionError(f"unhandled command {args.command!r}")
    except (ConfigError, PlotDataError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"runtime error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
