import argparse
import logging
import sys

from src.cli.bench import cmd_bench
from src.cli.check import cmd_check, cmd_check_family
from src.cli.compute import EXIT_INVALID, cmd_compute
from src.cli.registry import ALGORITHMS
from src.core.config import Settings
from src.core.errors import ConfigurationError


def build_parser():
    parser = argparse.ArgumentParser(
        description="Exact integration of products of linear forms over the unit simplex via queueing-network normalizing constants"
    )
    parser.add_argument("--verbose", "-v", action="count", default=0, help="Log INFO (-v) or DEBUG (-vv) to stderr.")
    parser.add_argument("--guard", type=int, default=None, help="State-space cap for the enumeration oracle.")
    parser.add_argument("--seed", type=int, default=None, help="Seed for generated instances.")
    parser.add_argument("--no-progress", action="store_true", help="Disable progress bars.")
    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", help="Compute G and/or J for an instance file.")
    compute.add_argument("--input", required=True, help="Path to a JSON instance file.")
    compute.add_argument("--algorithm", default="auto", choices=["auto", *ALGORITHMS])
    compute.add_argument("--quantity", choices=["G", "J", "both"], default=None)
    compute.add_argument("--output", choices=["json", "text"], default="json")

    check = commands.add_parser("check", help="Cross-check every applicable algorithm.")
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="Path to a JSON instance file.")
    source.add_argument("--family", type=int, help="Cross-check this many seeded random instances instead.")
    check.add_argument("--output", choices=["json", "text"], default="json")

    bench = commands.add_parser("bench", help="Measure work counters and wall time over an instance family.")
    bench.add_argument("--n", default="4", help='Station counts, e.g. "4", "2-4" or "2,4".')
    bench.add_argument("--d", default="1", help="Class counts.")
    bench.add_argument("--N", dest="population", default="50,100,200", help="Per-class populations.")
    bench.add_argument("--algorithms", default="convolution,explicit2", help="Comma-separated algorithm names.")
    bench.add_argument("--output", choices=["csv", "json"], default="csv")
    return parser


def configure(args):
    settings = Settings.from_env().override(state_guard=args.guard, seed=args.seed)
    levels = {0: settings.log_level, 1: "INFO", 2: "DEBUG"}
    logging.basicConfig(
        level=levels.get(min(args.verbose, 2)),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return settings


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        settings = configure(args)
    except ConfigurationError as error:
        print(f"error: {error.code}: {error.message}", file=sys.stderr)
        return EXIT_INVALID

    progress = not args.no_progress
    if args.command == "compute":
        code, text = cmd_compute(args.input, settings, args.algorithm, args.quantity, args.output)
    elif args.command == "check" and args.family is not None:
        code, text = cmd_check_family(settings, args.family, args.output, progress)
    elif args.command == "check":
        code, text = cmd_check(args.input, settings, args.output)
    else:
        algorithms = [name.strip() for name in args.algorithms.split(",") if name.strip()]
        code, text = cmd_bench(settings, args.n, args.d, args.population, algorithms, args.output, progress)
    print(text)
    return code


def menu():
    print("Select an option:")
    print("1. Compute G and J for an instance file")
    print("2. Cross-check all algorithms on an instance file")
    print("3. Cross-check a seeded random family")
    print("4. Benchmark work counters")
    print("5. Exit")

    choice = input("Enter the number of your choice: ")

    if choice == "1":
        path = input("Enter the instance file path: ")
        algorithm = input("Enter the algorithm (auto): ") or "auto"
        return run(["compute", "--input", path, "--algorithm", algorithm, "--output", "text"])
    elif choice == "2":
        path = input("Enter the instance file path: ")
        return run(["check", "--input", path, "--output", "text"])
    elif choice == "3":
        count = input("Enter the number of instances (200): ") or "200"
        seed = input("Enter the seed (SIMPLEX_SEED or 42): ")
        seed_args = ["--seed", seed] if seed else []
        return run([*seed_args, "check", "--family", count, "--output", "text"])
    elif choice == "4":
        n_values = input("Enter the station counts (4): ") or "4"
        d_values = input("Enter the class counts (1): ") or "1"
        populations = input("Enter the per-class populations (50,100,200): ") or "50,100,200"
        algorithms = input("Enter the algorithms (convolution,explicit2): ") or "convolution,explicit2"
        return run(["bench", "--n", n_values, "--d", d_values, "--N", populations, "--algorithms", algorithms])
    elif choice == "5":
        print("Exiting...")
        return 0
    else:
        print("Invalid choice. Please select a valid option.")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(run() if len(sys.argv) > 1 else menu())
