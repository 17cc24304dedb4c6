"""
Analysis commands - certificates, gap sets and p-vanishing scans.
"""

import argparse
import json
import logging

from symchar.commands.options import cache_option, jobs_option
from symchar.config import EXIT_CODES, TABLE_MAX_N
from symchar.services.partition_core import format_partition, parse_partition
from symchar.services.self_conjugate_gaps import gap_report
from symchar.services.zero_oracles import certify, scan_p_vanishing, verify_certificates

logger = logging.getLogger(__name__)


def cmd_certify(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    certificate = certify(alpha, beta, fallback_exact=args.fallback_exact, verify=args.verify)

    if certificate is None:
        logger.info(f"No rule fires for ({format_partition(alpha)}) at ({format_partition(beta)})")
        print(json.dumps({
            "alpha": format_partition(alpha),
            "beta": format_partition(beta),
            "verdict": None,
            "rule": None,
            "witness": {},
            "verified_by_mn": None,
        }, indent=2))
        return EXIT_CODES["ok"]

    print(certificate.model_dump_json(indent=2))
    if certificate.verified_by_mn is False:
        return EXIT_CODES["consistency"]
    return EXIT_CODES["ok"]


def cmd_verify(args: argparse.Namespace) -> int:
    """Certify every pair up to n and compare against exact values."""
    summary = verify_certificates(args.n)
    print(json.dumps(summary.to_dict(), indent=2))
    if summary.contradictions:
        logger.error(f"{len(summary.contradictions)} certificates contradict the exact values")
        return EXIT_CODES["consistency"]
    return EXIT_CODES["ok"]


def cmd_gaps(args: argparse.Namespace) -> int:
    report = gap_report(parse_partition(args.alpha))
    print(report.model_dump_json(indent=2))
    return EXIT_CODES["ok"]


def cmd_scan(args: argparse.Namespace) -> int:
    max_n = args.max_n if args.max_n is not None else TABLE_MAX_N
    report = scan_p_vanishing(args.n, args.p, jobs=args.jobs, max_n=max_n)
    print(report.model_dump_json(indent=2))
    if report.thm21_violations:
        return EXIT_CODES["consistency"]
    return EXIT_CODES["ok"]


def register(subparsers):
    certify_parser = subparsers.add_parser("certify", parents=[cache_option], help="certificate that chi^alpha(beta) is zero or nonzero")
    certify_parser.add_argument("alpha")
    certify_parser.add_argument("beta")
    certify_parser.add_argument("--verify", action="store_true", help="re-check against the exact value")
    certify_parser.add_argument("--fallback-exact", action="store_true", help="use the exact value when no rule fires")
    certify_parser.set_defaults(handler=cmd_certify)

    verify_parser = subparsers.add_parser("verify", parents=[cache_option], help="certify and re-check all pairs up to n")
    verify_parser.add_argument("n", type=int)
    verify_parser.set_defaults(handler=cmd_verify)

    gaps_parser = subparsers.add_parser("gaps", parents=[cache_option], help="hook-length gap set of a self-conjugate partition")
    gaps_parser.add_argument("alpha")
    gaps_parser.set_defaults(handler=cmd_gaps)

    scan_parser = subparsers.add_parser("scan", parents=[cache_option, jobs_option], help="p-vanishing classes of S_n")
    scan_parser.add_argument("n", type=int)
    scan_parser.add_argument("p", type=int)
    scan_parser.add_argument("--max-n", type=int, default=None, help=f"size bound (default {TABLE_MAX_N})")
    scan_parser.set_defaults(handler=cmd_scan)
