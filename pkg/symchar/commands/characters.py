"""
Character commands - full tables and single values.
"""

import argparse
import logging

from symchar.commands.options import cache_option, jobs_option
from symchar.config import EXIT_CODES, TABLE_MAX_N
from symchar.services.character_engine import character_table, mn_value
from symchar.services.partition_core import parse_partition

logger = logging.getLogger(__name__)


def cmd_table(args: argparse.Namespace) -> int:
    """Print the character table of S_n as CSV or JSON."""
    max_n = args.max_n if args.max_n is not None else TABLE_MAX_N
    table = character_table(args.n, jobs=args.jobs, max_n=max_n)
    if args.format == "json":
        print(table.to_json())
    else:
        print(table.to_csv(), end="")
    return EXIT_CODES["ok"]


def cmd_value(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    print(mn_value(alpha, beta))
    return EXIT_CODES["ok"]


def register(subparsers):
    table = subparsers.add_parser("table", parents=[cache_option, jobs_option], help="character table of S_n")
    table.add_argument("n", type=int)
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--max-n", type=int, default=None, help=f"size bound (default {TABLE_MAX_N})")
    table.set_defaults(handler=cmd_table)

    value = subparsers.add_parser("value", parents=[cache_option], help="exact value chi^alpha(beta)")
    value.add_argument("alpha", help='character partition, e.g. "13,5,2^3,1^8"')
    value.add_argument("beta", help='class partition, e.g. "20,5,2^3,1"')
    value.set_defaults(handler=cmd_value)
