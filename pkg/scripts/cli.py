import argparse
import asyncio
import sys

from dotenv import load_dotenv

from lindec.cli_v1 import cmd_list, cmd_plotdata, cmd_run, cmd_synth
from lindec.utils_v1.logging_utils import setup_logging


def main(args: argparse.Namespace) -> int:
    if args.command == "run":
        if args.list:
            return cmd_list()
        if not args.config or not args.out:
            print("error: run needs --config and --out (or --list)", file=sys.stderr)
            return 2
        return asyncio.run(cmd_run(args.config, args.out, dump_models=args.dump_models))
    if args.command == "synth":
        return cmd_synth(args.n, args.noise_std, args.seed, args.out, x_max=args.x_max, x_min=args.x_min)
    return cmd_plotdata(args.artifacts, args.out, seed=args.seed)


if __name__ == "__main__":
    load_dotenv()
    setup_logging()

    parser = argparse.ArgumentParser(description="Measure the linear decodability of trained regression networks.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser("run", help="Run an experiment config or bundled preset")
    run_parser.add_argument("--config", default=None, help="Config path or preset name (see --list)")
    run_parser.add_argument("--dump-models", action="store_true", help="Dump per-seed models under <out>/artifacts")
    run_parser.add_argument("--list", action="store_true", help="List bundled presets and exit")
    run_parser.add_argument("--out", default=None, help="Output directory for report.json and plot data")

    synth_parser = subparsers.add_parser("synth", help="Write the synthetic x·sin(x) dataset as CSV")
    synth_parser.add_argument("--n", type=int, default=2000)
    synth_parser.add_argument("--noise-std", type=float, default=0.2)
    synth_parser.add_argument("--out", required=True)
    synth_parser.add_argument("--seed", type=int, default=0)
    synth_parser.add_argument("--x-max", type=float, default=4.0)
    synth_parser.add_argument("--x-min", type=float, default=-4.0)

    plot_parser = subparsers.add_parser("plotdata", help="Emit plot series from dumped models")
    plot_parser.add_argument("--artifacts", required=True, help="Artifacts directory written by run --dump-models")
    plot_parser.add_argument("--out", required=True)
    plot_parser.add_argument("--seed", type=int, default=None, help="Dumped seed to render (default: lowest)")

    sys.exit(main(parser.parse_args()))
