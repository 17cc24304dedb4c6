"""
Options accepted both before and after the verb.
"""

import argparse


def _shared_option(*flags, **kwargs) -> argparse.ArgumentParser:
    # SUPPRESS keeps the top-level value unless the flag is repeated after the verb
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(*flags, default=argparse.SUPPRESS, **kwargs)
    return parent


cache_option = _shared_option("--cache", help="append-only memo file shared between runs")
jobs_option = _shared_option("--jobs", type=int, help="worker threads for tables and scans")
