"""
chromakh - categorified colored Jones polynomials

Main entry point for the command-line interface.
"""

import argparse
import logging
import sys

from .algebra import set_check_limit
from .cli.commands import dispatch
from .cli.suites import SUITES
from .config import VALID_FIELDS, VALID_VARIANTS, Config
from .errors import ChromaKhError, InputError


def _add_diagram_arguments(parser: argparse.ArgumentParser, colors: bool = True) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--knot", type=str, help="Name of a bundled diagram (default: unknot)")
    source.add_argument("--pd", type=str, help="Path to a PD-code JSON file")
    if colors:
        coloring = parser.add_mutually_exclusive_group()
        coloring.add_argument("--color", type=int, help="Color of every component")
        coloring.add_argument("--colors", type=str, help='Colors per component as JSON, e.g. "[1, 2]"')
    parser.add_argument("--out", type=str, help="Write the result to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromakh",
        description="Colored Jones polynomials and their categorification",
    )
    parser.add_argument("--config", type=str, help="YAML configuration file")
    parser.add_argument("--cache-dir", type=str, help="Result cache directory (default: .chromakh-cache)")
    parser.add_argument("--no-cache", action="store_true", help="Do not read or write the result cache")
    parser.add_argument("--seed", type=int, help="Seed for randomized checks (default: 0)")
    parser.add_argument("--max-n", type=int, help="Largest color for the verification suites (default: 8)")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose output")

    commands = parser.add_subparsers(dest="command", required=True)

    jones = commands.add_parser("jones", help="Print the Jones polynomial")
    _add_diagram_arguments(jones, colors=False)

    colored = commands.add_parser("colored-jones", help="Print the colored Jones polynomial")
    _add_diagram_arguments(colored)

    homology = commands.add_parser("homology", help="Compute colored homology as Betti JSON")
    _add_diagram_arguments(homology)
    homology.add_argument("--field", type=str, choices=VALID_FIELDS, help="Coefficient field (default: q)")
    homology.add_argument(
        "--variant", type=str, choices=VALID_VARIANTS, help="Complex variant (default: contract_full)"
    )
    homology.add_argument("--reduced", action="store_true", help="Reduced theory over f2")
    homology.add_argument(
        "--distinguished", type=int, default=0, help="Component cut open for --reduced (default: 0)"
    )

    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("suite", type=str, choices=SUITES, help="Suite to run")
    verify.add_argument("--out", type=str, help="Write the JSON report to this file")
    verify.add_argument(
        "--desk",
        action="store_true",
        help="Run the acceptance cases at desk scale; skipped cases fail the run",
    )

    commands.add_parser("knots", help="List the bundled diagrams")
    return parser


def main(argv=None):
    """Main entry point for the CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    # Load configuration
    try:
        config = Config(args.config)
        if args.cache_dir:
            config.cache_dir = args.cache_dir
        if args.no_cache:
            config.enable_caching = False
        if args.seed is not None:
            config.seed = args.seed
        if args.max_n is not None:
            config.max_n = args.max_n
        config.verbose = config.verbose or args.verbose
        config.desk = getattr(args, "desk", False)
        config._validate_config()
    except ValueError as e:
        print(f"✗ Configuration Error: {e}", file=sys.stderr)
        return 2

    set_check_limit(config.d_squared_limit if config.check_invariants else 0)

    if args.verbose:
        print(f"chromakh - {args.command}")
        print(f"Cache: {config.cache_dir if config.enable_caching else 'disabled'}")
        print()

    try:
        return dispatch(args, config)

    except KeyboardInterrupt:
        print("\n\nOperation cancelled by user.")
        return 130

    except (InputError, ValueError) as e:
        print(f"\n✗ Input Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback

            traceback.print_exc()
        return 2

    except ChromaKhError as e:
        print(f"\n✗ Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback

            traceback.print_exc()
        return e.exit_code

    except Exception as e:
        print(f"\n✗ Error: {e}", file=sys.stderr)
        if args.verbose:
            import traceback

            traceback.print_exc()
        return 3


if __name__ == "__main__":
    sys.exit(main())
