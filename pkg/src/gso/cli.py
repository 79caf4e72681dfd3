"""Command line surface.

Subcommands: solve, mine, verify-paper, branches, glue.  Reports go to
stdout as JSON; graph artifacts go to --out.  Exit codes: 0 success,
1 failed verification, 2 input/parse error, 3 budget exhaustion.
Worker count for per-graph parallel sections comes from GSO_THREADS.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict

from . import __version__
from .expansions import expansion_to_strategy
from .gio import (
    Graph6Error,
    graph6_decode,
    graph6_encode,
    rooted_from_json,
    write_graph6_lines,
)
from .graphs import RootedGraph, enhance
from .obstructions import (
    branch_count,
    branch_set,
    glue_family_at_root,
    mine_branch_base,
    mine_obstructions,
    obr_count,
    obr_set,
)
from .paperchecks import run_all
from .simulate import Move
from .solvers import BudgetExceeded, cmp_value, mp_value, solve_game


def _threads() -> int:
    return max(1, int(os.environ.get("GSO_THREADS", "1")))


def _read_inputs(path: str) -> list[RootedGraph]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("{"):
                out.append(rooted_from_json(line))
            else:
                out.append(RootedGraph(graph6_decode(line)))
    return out


def _moves_jsonl(moves: list[Move]) -> list[str]:
    lines = []
    for mv in moves:
        obj = {"op": mv.kind, "v": mv.v}
        if mv.u is not None:
            obj["u"] = mv.u
        lines.append(json.dumps(obj, sort_keys=True))
    return lines


def _witness_path(out: str, index: int, many: bool) -> str:
    if not many:
        return out
    root, ext = os.path.splitext(out)
    return f"{root}.{index}{ext or '.jsonl'}"


def _solve_one(rg: RootedGraph, param: str, k: int | None, budget: int | None, wit: bool):
    if param in ("cmp", "mp"):
        fn = cmp_value if param == "cmp" else mp_value
        res = fn(rg, witness=wit)
        moves = None
        if wit and res.witness is not None:
            moves = expansion_to_strategy(enhance(rg), res.witness)
        value = res.value
    else:
        if rg.s_in or rg.s_out:
            raise ValueError(f"param {param} takes plain graphs, not rooted ones")
        flags = {
            "ms": dict(monotone=True),
            "cms": dict(connected=True),
            "cmms": dict(connected=True, monotone=True),
        }[param]
        g = rg.graph
        value = None
        moves = None
        for kk in range(g.n + 1):
            ok, w, _ = solve_game(g, kk, witness=wit, budget=budget, **flags)
            if ok:
                value, moves = kk, w
                break
    entry = {"g6": graph6_encode(rg.graph), "param": param, "value": value}
    if rg.s_in or rg.s_out:
        entry["s_in"] = sorted(rg.s_in)
        entry["s_out"] = sorted(rg.s_out)
    if k is not None:
        entry["decision"] = value <= k
    return entry, moves


def cmd_solve(args) -> int:
    try:
        inputs = _read_inputs(args.input)
    except (Graph6Error, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        with ThreadPoolExecutor(max_workers=_threads()) as pool:
            results = list(
                pool.map(
                    lambda rg: _solve_one(
                        rg, args.param, args.k, args.budget, args.emit_witness
                    ),
                    inputs,
                )
            )
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.emit_witness and args.out:
        many = len(results) > 1
        for i, (_, moves) in enumerate(results):
            if moves is None:
                continue
            with open(_witness_path(args.out, i, many), "w") as fh:
                fh.write("\n".join(_moves_jsonl(moves)) + "\n")
    report = {
        "command": "solve",
        "version": __version__,
        "param": args.param,
        "k": args.k,
        "results": [entry for entry, _ in results],
    }
    print(json.dumps(report, sort_keys=True, indent=2))
    return 0


def cmd_mine(args) -> int:
    mined = mine_obstructions(args.max_n, args.param, args.k, args.relation)
    if args.out:
        with open(args.out, "w") as fh:
            write_graph6_lines(mined, fh)
    report = {
        "command": "mine",
        "version": __version__,
        "param": args.param,
        "k": args.k,
        "relation": args.relation,
        "completeness_bound": args.max_n,
        "count": len(mined),
        "graphs": [graph6_encode(g) for g in mined],
    }
    print(json.dumps(report, sort_keys=True, indent=2))
    return 0


def cmd_verify_paper(args) -> int:
    checks = run_all(
        families_dir=args.families, seed=args.seed, quick=args.quick
    )
    report = {
        "command": "verify-paper",
        "version": __version__,
        "seed": args.seed,
        "checks": [asdict(c) for c in checks],
        "ok": all(c.ok for c in checks),
    }
    print(json.dumps(report, sort_keys=True, indent=2))
    return 0 if report["ok"] else 1


def _load_base(path: str | None):
    if path is None:
        return mine_branch_base(7)
    return _read_inputs(path)


def cmd_branches(args) -> int:
    report = {
        "command": "branches",
        "version": __version__,
        "k": args.k,
        "branch_count": branch_count(args.k, args.base_size),
        "obr_count": obr_count(args.k, args.base_size),
    }
    if not args.count_only:
        try:
            base = _load_base(args.base)
        except (Graph6Error, ValueError, KeyError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        branches = branch_set(args.k, base)
        report["materialized_branches"] = len(branches)
        obr = sorted(obr_set(args.k, base), key=graph6_encode)
        report["materialized_obr"] = len(obr)
        if args.out:
            with open(args.out, "w") as fh:
                write_graph6_lines(obr, fh)
    print(json.dumps(report, sort_keys=True, indent=2))
    return 0


def cmd_glue(args) -> int:
    try:
        fam = _read_inputs(args.family)
        glued = sorted(glue_family_at_root(fam, args.m), key=graph6_encode)
    except (Graph6Error, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            write_graph6_lines(glued, fh)
    report = {
        "command": "glue",
        "version": __version__,
        "family_size": len(fam),
        "m": args.m,
        "count": len(glued),
    }
    print(json.dumps(report, sort_keys=True, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gso", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="search numbers for graphs in a file")
    p.add_argument("input")
    p.add_argument("--param", choices=["ms", "cms", "cmms", "cmp", "mp"], default="cmms")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, metavar="NODES")
    p.add_argument("--emit-witness", action="store_true")
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("mine", help="mine minimal obstructions")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--param", choices=["cmp", "cms", "mp"], default="cmp")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--relation", choices=["contraction", "minor"], default="contraction")
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(fn=cmd_mine)

    p = sub.add_parser("verify-paper", help="run the reproducibility checklist")
    p.add_argument("--families", default=None, metavar="DIR")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("branches", help="lower-bound branch families")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--base", default=None, metavar="FILE")
    p.add_argument("--base-size", type=int, default=5)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(fn=cmd_branches)

    p = sub.add_parser("glue", help="root-glue a rooted family")
    p.add_argument("--family", required=True, metavar="FILE")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(fn=cmd_glue)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
