"""
symchar - exact character values of symmetric groups

Command-line front door for character tables, single values, vanishing
certificates, self-conjugate gap sets and p-vanishing scans. Results go
to stdout; logs go to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional

from symchar.commands import analysis, characters
from symchar.config import DEBUG, EXIT_CODES, MEMO_PATH
from symchar.exceptions import ConsistencyError, DomainError, PartitionParseError
from symchar.services.cache import memo_cache

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if (DEBUG or verbose) else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symchar",
        description="Exact irreducible character values of symmetric groups.",
    )
    parser.add_argument("--cache", default=MEMO_PATH, help="append-only memo file shared between runs")
    parser.add_argument("--jobs", type=int, default=1, help="worker threads for tables and scans")
    parser.add_argument("--verbose", action="store_true", help="debug logging")

    subparsers = parser.add_subparsers(dest="command", required=True)
    characters.register(subparsers)
    analysis.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        if args.cache:
            memo_cache.attach(args.cache)
        return args.handler(args)
    except (PartitionParseError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CODES["usage"]
    except OSError as e:
        print(f"error: memo cache {args.cache}: {e}", file=sys.stderr)
        return EXIT_CODES["usage"]
    except ConsistencyError as e:
        logger.error(f"Internal consistency violation: {e}")
        print(f"consistency error: {e}", file=sys.stderr)
        return EXIT_CODES["consistency"]
    finally:
        if args.cache:
            try:
                memo_cache.flush()
            except OSError as e:
                logger.warning(f"Could not append to memo cache {args.cache}: {e}")


if __name__ == "__main__":
    sys.exit(main())
