#!/usr/bin/env python3
"""Mine minimal obstructions for a search parameter and print a report.

Example:
    python3 scripts/mine_obstructions.py --param cmp -k 1 --max-n 6
"""

import argparse
import json
import sys

from gso.gio import graph6_encode, write_graph6_lines
from gso.obstructions import mine_obstructions
from gso.solvers import cmp_plain, mp_plain


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--param", choices=["cmp", "cms", "mp"], default="cmp")
    ap.add_argument("-k", type=int, required=True)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument(
        "--relation", choices=["contraction", "minor"], default="contraction"
    )
    ap.add_argument("--out", default=None, metavar="FILE")
    args = ap.parse_args(argv)

    mined = mine_obstructions(args.max_n, args.param, args.k, args.relation)
    values = {"cmp": cmp_plain, "mp": mp_plain}.get(args.param)
    report = {
        "param": args.param,
        "k": args.k,
        "relation": args.relation,
        "completeness_bound": args.max_n,
        "count": len(mined),
        "graphs": [
            {
                "g6": graph6_encode(g),
                "n": g.n,
                "m": g.m,
                **({"value": values(g)} if values else {}),
            }
            for g in mined
        ],
    }
    if args.out:
        with open(args.out, "w") as fh:
            write_graph6_lines(mined, fh)
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
