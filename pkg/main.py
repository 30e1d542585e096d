"""Main entry point for the multialgebra toolkit."""
import argparse
import logging
import sys

from src.config import Config, OUTPUT_FORMATS
from src.errors import MultialgebraError
from src.export import ReportExporter
from src.hyperstructures.commutative import STRATEGIES
from src.pipeline import GEN_KINDS, CommandPipeline

logger = logging.getLogger(__name__)

EXIT_USAGE = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Fundamental relations, factor multialgebras and colimits of finite multialgebras"
    )
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Report format (default: OUTPUT_FORMAT or text)")
    parser.add_argument("--max-enum", type=int, default=None, help="Largest carrier for partition enumeration")
    parser.add_argument("--max-sat", type=int, default=None, help="Largest carrier for polynomial saturation")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized generators")
    parser.add_argument("--output", default=None, help="Write the report to this file instead of stdout")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    validate_parser = subparsers.add_parser("validate", help="Parse and check a structure file")
    validate_parser.add_argument("file")

    fundamental_parser = subparsers.add_parser("fundamental", help="Fundamental or I-fundamental relation")
    fundamental_parser.add_argument("file")
    fundamental_parser.add_argument("--identities", default=None, help="Identity file, one identity per line")
    fundamental_parser.add_argument(
        "--oracle", action="store_true", help="Cross-check against partition enumeration and polynomial saturation"
    )

    subparsers.add_parser("axioms", help="Hyperstructure axiom report").add_argument("file")

    alpha_parser = subparsers.add_parser("hyperring-alpha", help="Commutative fundamental relation of a hyperring")
    alpha_parser.add_argument("file")
    alpha_parser.add_argument("--strategy", choices=STRATEGIES, default="def1")
    alpha_parser.add_argument("--smax", type=int, default=None, help="Expression-size cap (default: S_MAX or 6)")

    factor_parser = subparsers.add_parser("factor", help="Factor multialgebra by a partition")
    factor_parser.add_argument("file")
    factor_parser.add_argument("--partition", required=True, help="Partition such as {{0,1},{2}}")

    colimit_parser = subparsers.add_parser("colimit", help="Directed colimit and its preservation check")
    colimit_parser.add_argument("file", help="Diagram file")
    colimit_parser.add_argument("--identities", default=None, help="Identity file, one identity per line")

    gen_parser = subparsers.add_parser("gen", help="Generate a fixture structure")
    gen_parser.add_argument("kind", choices=GEN_KINDS)
    gen_parser.add_argument("--n", default=None, help="Carrier size")
    gen_parser.add_argument("--modulus", default=None, help="Modulus of the Krasner quotient")
    gen_parser.add_argument("--subgroup", default=None, help="Unit subgroup, e.g. 1,4")
    gen_parser.add_argument("--ideal", default=None, help="Ideal of Z_n for inflated-ring, e.g. 0,2")
    gen_parser.add_argument("--signature", default=None, help="Signature for random, e.g. plus/2,times/2")
    return parser


def run(args: argparse.Namespace, config: Config) -> int:
    pipeline = CommandPipeline(config)
    if args.command == "validate":
        result = pipeline.validate(args.file)
    elif args.command == "fundamental":
        result = pipeline.fundamental(args.file, args.identities, args.oracle)
    elif args.command == "axioms":
        result = pipeline.axioms(args.file)
    elif args.command == "hyperring-alpha":
        result = pipeline.hyperring_alpha(args.file, args.strategy, config.s_max)
    elif args.command == "factor":
        result = pipeline.factor(args.file, args.partition)
    elif args.command == "colimit":
        result = pipeline.colimit(args.file, args.identities)
    else:
        params = {
            "n": args.n,
            "modulus": args.modulus,
            "subgroup": args.subgroup,
            "ideal": args.ideal,
            "signature": args.signature,
            "seed": None if args.seed is None else str(args.seed),
        }
        result = pipeline.gen(args.kind, params)

    text = ReportExporter().write(result.report, config.output_format, args.output)
    if args.output is None:
        sys.stdout.write(text)
    return result.exit_code


def main(argv=None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        config = Config.from_env().with_overrides(
            output_format=args.format,
            max_enum_carrier=args.max_enum,
            max_sat_carrier=args.max_sat,
            seed=args.seed,
            s_max=getattr(args, "smax", None),
        )
    except ValueError as e:
        logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        logger.error(f"Configuration error: {e}")
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, config.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logger.info(f"Running {args.command}")
    try:
        exit_code = run(args, config)
    except MultialgebraError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except ValueError as e:
        logger.error(f"Invalid argument: {e}")
        return EXIT_USAGE
    logger.info(f"{args.command} finished with exit code {exit_code}")
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
