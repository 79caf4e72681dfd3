#!/usr/bin/env python3
"""Build the recursive branch families and report counts and bounds.

Example:
    python3 scripts/branch_families.py -k 2
    python3 scripts/branch_families.py -k 1 --materialize --out obr1.g6
"""

import argparse
import json
import sys

from gso.gio import write_graph6_lines
from gso.obstructions import (
    branch_count,
    branch_count_lower_bound_holds,
    branch_set,
    mine_branch_base,
    mine_fan_base,
    obr_count,
    obr_count_lower_bound_holds,
    obr_set,
)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-k", type=int, required=True)
    ap.add_argument(
        "--base",
        choices=["branch", "fan"],
        default="branch",
        help="which mined level-1 family seeds the recursion",
    )
    ap.add_argument("--materialize", action="store_true")
    ap.add_argument("--out", default=None, metavar="FILE")
    args = ap.parse_args(argv)

    base = (mine_branch_base if args.base == "branch" else mine_fan_base)(7)
    report = {
        "k": args.k,
        "base": args.base,
        "base_size": len(base),
        "branch_count": branch_count(args.k, len(base)),
        "obr_count": obr_count(args.k, len(base)),
        "branch_bound_holds": branch_count_lower_bound_holds(args.k, len(base)),
        "obr_bound_holds": obr_count_lower_bound_holds(args.k, len(base)),
    }
    if args.materialize:
        branches = branch_set(args.k, base)
        fam = sorted(obr_set(args.k, base), key=lambda g: (g.n, g.edges))
        report["materialized_branches"] = len(branches)
        report["materialized_obr"] = len(fam)
        if args.out:
            with open(args.out, "w") as fh:
                write_graph6_lines(fam, fh)
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
