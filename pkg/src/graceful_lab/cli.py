"""Command line entry point: ``graceful-lab <command> ...``.

Every command writes JSON to stdout except ``fixtures``, ``gen`` and ``dot``,
which write edge lists or DOT so they can be piped into other commands::

    graceful-lab fixtures T | graceful-lab search --zero-on 3 --mode first

Exit codes: 0 success, 1 expectation mismatch (``--expect``) or a hunt that
found failures, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .families import FamilyFilter, filter_family, generate_trees
from .fixtures import FIXTURES
from .labeling import Labeling, LabelingError, as_labeling, weight_report
from .probes import PROBES, hunt, run_probe
from .search import MODES, THREADS_ENV, ConstraintError, ConstraintSet, cross_check, search_graceful
from .tree import Tree, TreeError, parse_tree


class UsageError(Exception):
    pass


def export_dot(tree: Tree, labeling: Labeling | Sequence[int] | None = None) -> str:
    lab = as_labeling(tree, labeling) if labeling is not None else None
    lines = ["graph tree {"]
    for v in range(tree.n):
        text = f"{v}:{lab[v]}" if lab is not None else str(v)
        lines.append(f'  {v} [label="{text}"];')
    for u, v in tree.edges:
        if lab is not None:
            lines.append(f'  {u} -- {v} [label="{abs(lab[u] - lab[v])}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_tree(arg: str | None) -> Tree:
    """Resolve a tree argument: stdin, a file, a fixture name, or inline text."""
    if arg is None or arg == "-":
        return parse_tree(sys.stdin.read())
    path = Path(arg)
    if path.is_file():
        return parse_tree(path.read_text(encoding="utf-8"))
    name = arg.split("/", 1)[1] if arg.startswith("fixtures/") else arg
    if name in FIXTURES:
        return FIXTURES[name]
    if ";" in arg or "\n" in arg:
        return parse_tree(arg)
    raise UsageError(f"cannot read tree {arg!r}: not a file, fixture ({', '.join(FIXTURES)}) or inline edge list")


def load_labeling(arg: str) -> Labeling:
    path = Path(arg)
    text = path.read_text(encoding="utf-8") if path.is_file() else arg
    try:
        return Labeling.from_json(text)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot parse labeling {arg!r}: {exc}") from None


def _parse_fix(text: str) -> tuple[int, int]:
    try:
        v, l = text.split("=")
        return int(v), int(l)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--fix expects v=l, got {text!r}") from None


def _add_filters(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("family filters")
    g.add_argument("--diameter", type=int, help="exact diameter")
    g.add_argument("--min-diameter", type=int)
    g.add_argument("--max-diameter", type=int)
    g.add_argument("--max-k", type=int, help="k-distance ceiling (1 caterpillar, 2 lobster)")
    g.add_argument("--center-parity", choices=["even", "odd"])
    g.add_argument("--centers", type=int, choices=[1, 2], help="number of centers")


def _family(args: argparse.Namespace) -> FamilyFilter:
    lo, hi = args.min_diameter, args.max_diameter
    if args.diameter is not None:
        lo = hi = args.diameter
    return FamilyFilter(
        min_diameter=lo,
        max_diameter=hi,
        max_k_distance=args.max_k,
        center_parity=args.center_parity,
        center_count=args.centers,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graceful-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None,
                        help=f"worker count for search (default ${THREADS_ENV} or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a labeling against the predicates")
    p.add_argument("tree")
    p.add_argument("labeling", help="JSON list, {\"labels\": [...]}, or a file holding either")

    p = sub.add_parser("search", help="constrained exhaustive search")
    p.add_argument("tree", nargs="?", default="-")
    p.add_argument("--alpha", action="store_true", help="require an alpha-labeling")
    p.add_argument("--fix", action="append", type=_parse_fix, default=[], metavar="V=L")
    p.add_argument("--max-on", type=int)
    p.add_argument("--critical-on", type=int)
    p.add_argument("--zero-on", type=int)
    p.add_argument("--mode", choices=MODES, default="first")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force (n <= 9)")
    p.add_argument("--expect", choices=["sat", "unsat"])

    p = sub.add_parser("probe", help="run one probe on one tree")
    p.add_argument("probe", choices=sorted(PROBES))
    p.add_argument("tree", nargs="?", default="-")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--expect", choices=["sat", "unsat"])

    p = sub.add_parser("hunt", help="run a probe over a tree family")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--probe", choices=sorted(PROBES), required=True)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--summary", action="store_true", help="omit per-tree certificates")
    _add_filters(p)

    p = sub.add_parser("gen", help="one edge list per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    _add_filters(p)

    p = sub.add_parser("fixtures", help="print a reference tree as an edge list")
    p.add_argument("name", choices=sorted(FIXTURES))

    p = sub.add_parser("dot", help="render a tree, optionally labeled, as DOT")
    p.add_argument("tree", nargs="?", default="-")
    p.add_argument("--labeling")
    return parser


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _expect(expect: str | None, sat: bool) -> int:
    if expect is None:
        return 0
    return 0 if (expect == "sat") == sat else 1


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    threads = args.threads
    if threads is None and os.environ.get(THREADS_ENV):
        threads = int(os.environ[THREADS_ENV])
    try:
        return _dispatch(args, threads)
    except (UsageError, TreeError, LabelingError, ConstraintError, ValueError) as exc:
        print(f"graceful-lab: error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace, threads: int | None) -> int:
    cmd = args.command
    if cmd == "verify":
        tree = load_tree(args.tree)
        _emit(weight_report(tree, load_labeling(args.labeling)))
        return 0

    if cmd == "search":
        tree = load_tree(args.tree)
        cs = ConstraintSet(
            fixed=dict(args.fix),
            require_alpha=args.alpha,
            critical_on=args.critical_on,
            max_on=args.max_on,
            zero_on=args.zero_on,
        )
        cert = search_graceful(tree, cs, mode=args.mode, threads=threads)
        if args.oracle:
            cross_check(cert, tree)
        _emit(cert.to_dict())
        return _expect(args.expect, cert.sat)

    if cmd == "probe":
        tree = load_tree(args.tree)
        verdict = run_probe(args.probe, tree, oracle=not args.no_oracle, threads=threads)
        _emit(verdict.to_dict())
        return _expect(args.expect, verdict.applicable and not verdict.failed)

    if cmd == "hunt":
        report = hunt(args.n_max, _family(args), args.probe, oracle=not args.no_oracle, threads=threads)
        out = report.to_dict()
        if args.summary:
            out["entries"] = [
                {"code": e.code, "n": e.n, "applicable": e.applicable, "verdicts": e.verdicts}
                for e in report.entries
            ]
        _emit(out)
        return 1 if report.failures else 0

    if cmd == "gen":
        for t in filter_family(generate_trees(args.n), _family(args)):
            sys.stdout.write(t.to_edge_list(single_line=True) + "\n")
        return 0

    if cmd == "fixtures":
        sys.stdout.write(FIXTURES[args.name].to_edge_list())
        return 0

    if cmd == "dot":
        tree = load_tree(args.tree)
        lab = load_labeling(args.labeling) if args.labeling else None
        sys.stdout.write(export_dot(tree, lab))
        return 0

    raise UsageError(f"unknown command {cmd}")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
