"""Command-line front end.

Verbs: classify, abacus, crystal, enumerate, verify. Bipartitions are given
as "parts|parts" (e.g. "2,2|"), the charge as the single integer s for the
normalized pair (0, s). Data goes to stdout, diagnostics to stderr. Exit
status: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .abacus import build_abacus, is_totally_e_periodic, render_abacus
from .classify import classify_theorem, verify_range
from .crystal import build_crystal_graph, crystal_to_dot, crystal_to_json
from .fock import FockParams, c_function, rational_str
from .partitions import enumerate_bipartitions, format_bipartition, parse_bipartition


def _parse_range(text: str) -> list[int]:
    """Parse "a..b" (inclusive) or a comma-separated list of integers."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(tok) for tok in text.split(",")]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fock2",
        description="Exact combinatorics of charged bipartitions: classifier, "
        "abacus, crystal, and verification harness.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="classify a bipartition at (e, s)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--bp", required=True, help='bipartition text, e.g. "2,2|"')
    p.add_argument("--format", choices=("text", "json"), default="json")

    p = sub.add_parser("abacus", help="render the abacus and its periodicity")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--bp", required=True)
    p.add_argument("--window", default="-8..8", help="column range, e.g. -2..2")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("crystal", help="export the crystal graph up to n_max")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser("enumerate", help="list all bipartitions of n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="run the property harness over a grid")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--e", required=True, help="comma-separated ranks, e.g. 2,3")
    p.add_argument("--s", default=None, help="charge range a..b; default -2e..2e per rank")
    return parser


def _cmd_classify(args) -> int:
    fp = FockParams(args.e, args.s)
    bp = parse_bipartition(args.bp)
    res = classify_theorem(bp, fp)
    payload = {
        "bipartition": format_bipartition(bp),
        "e": fp.e,
        "s": fp.s,
        "unitary_fd": res.unitary_fd,
        "reason": res.reason,
        "c_function": rational_str(c_function(bp, fp)),
    }
    if res.witness is not None:
        payload.update(
            component=res.witness.component,
            r=res.witness.rows,
            q=res.witness.columns,
            required_s=res.witness.required_s,
        )
    if args.format == "json":
        print(json.dumps(payload))
    else:
        verdict = "unitary and finite-dimensional" if res.unitary_fd else res.reason
        print(f"{payload['bipartition']} at e={fp.e}, s={fp.s}: {verdict}")
    return 0


def _cmd_abacus(args) -> int:
    fp = FockParams(args.e, args.s)
    bp = parse_bipartition(args.bp)
    ab = build_abacus(bp, fp)
    periodic, decomp = is_totally_e_periodic(bp, fp)
    verdict = f"{'totally' if periodic else 'not totally'} {fp.e}-periodic"
    if args.format == "json":
        payload = ab.to_json()
        payload["totally_periodic"] = periodic
        payload["periods"] = [list(per.beads) for per in decomp.periods]
        if decomp.residual_charge is not None:
            payload["residual_charge"] = list(decomp.residual_charge)
        print(json.dumps(payload))
    else:
        lo, hi = args.window.split("..", 1)
        print(render_abacus(ab, int(lo), int(hi)))
        print(verdict)
    return 0


def _cmd_crystal(args) -> int:
    graph = build_crystal_graph(args.nmax, FockParams(args.e, args.s))
    if args.format == "dot":
        print(crystal_to_dot(graph))
    else:
        print(json.dumps(crystal_to_json(graph)))
    return 0


def _cmd_enumerate(args) -> int:
    for bp in enumerate_bipartitions(args.n):
        print(format_bipartition(bp))
    return 0


def _cmd_verify(args) -> int:
    e_values = _parse_range(args.e)
    s_values = _parse_range(args.s) if args.s is not None else None
    report = verify_range(args.nmax, e_values, s_values)
    print(json.dumps(report))
    if report["total_violations"]:
        print(f"{report['total_violations']} violations found", file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "abacus": _cmd_abacus,
    "crystal": _cmd_crystal,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
