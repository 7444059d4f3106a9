"""Command-line front end (``rmis`` or ``python -m rmis``).

Exit codes: 0 yes/robust, 1 no/not robust, 2 parse or usage error,
3 brute-force size guard refused the instance.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import generators, io, oracle
from .classification import Robustness, RobustnessClass, classify
from .construction import construct
from .decomposition import TreeGraphError, analyze_blocks, build_abc_tree
from .graph import Graph, GraphError, split_components
from .labeling import decide


class UsageError(Exception):
    pass


def _load(args) -> tuple[Graph, list[int]]:
    path = Path(args.file)
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    return io.parse_graph(path.read_text(), args.format)


def _parts(g: Graph, labels: list[int]):
    for sub, to_global in split_components(g):
        yield sub, [labels[v] for v in to_global]


def cmd_decide(args) -> int:
    g, _ = _load(args)
    ok = all(decide(sub).accept for sub, _ in split_components(g))
    print("YES" if ok else "NO")
    return 0 if ok else 1


def cmd_construct(args) -> int:
    g, labels = _load(args)
    w = construct(g)
    if w is None:
        print("NONE")
        return 1
    print(" ".join(str(x) for x in sorted(labels[v] for v in w.vertices)))
    return 0


def cmd_verify(args) -> int:
    g, labels = _load(args)
    try:
        wanted = {int(t) for t in args.mis.replace(",", " ").split()}
    except ValueError:
        raise UsageError(f"--mis must be comma-separated integers, got {args.mis!r}") from None
    index = {lab: i for i, lab in enumerate(labels)}
    if not wanted <= index.keys():
        print("NOT_AN_MIS")
        return 1
    m = frozenset(index[x] for x in wanted)
    try:
        oracle.check_mis(g, m)
    except oracle.NotAnMisError:
        print("NOT_AN_MIS")
        return 1
    robust = True
    for sub, to_global in split_components(g):
        local = {i for i, v in enumerate(to_global) if v in m}
        robust = robust and oracle.is_robust_mis(sub, local)
    print("ROBUST" if robust else "NOT_ROBUST")
    return 0 if robust else 1


def cmd_classify(args) -> int:
    g, labels = _load(args)
    results = [(classify(sub), lab) for sub, lab in _parts(g, labels)]
    if len(results) == 1:
        cls, lab = results[0]
        if cls.witness is not None:
            cls = RobustnessClass(cls.tag, cls.evidence, frozenset(lab[v] for v in cls.witness))
        print(cls)
        return 0 if cls.tag is not Robustness.NONE_ROBUST else 1
    tags = {cls.tag for cls, _ in results}
    if tags == {Robustness.ALL_ROBUST}:
        overall = Robustness.ALL_ROBUST
    elif Robustness.NONE_ROBUST in tags:
        overall = Robustness.NONE_ROBUST
    else:
        overall = Robustness.SOME_ROBUST
    print(f"{overall.value} per-component")
    for cls, lab in results:
        if cls.witness is not None:
            cls = RobustnessClass(cls.tag, cls.evidence, frozenset(lab[v] for v in cls.witness))
        print(f"  [{','.join(map(str, lab))}] {cls}")
    return 0 if overall is not Robustness.NONE_ROBUST else 1


def cmd_decompose(args) -> int:
    g, labels = _load(args)
    records, texts, dots = [], [], []
    offset = 0
    for k, (sub, lab) in enumerate(_parts(g, labels)):
        try:
            tree = build_abc_tree(analyze_blocks(sub), sub)
        except TreeGraphError:
            texts.append(f"# component {k}: tree graph, no biconnected component\n")
            dots.append(f"graph abc{k} {{\n}}\n")
            continue
        d = decide(sub)
        for rec in io.tree_records(tree, d.labels, lab):
            rec["component"] = k
            rec["node_id"] += offset
            if rec["parent"] is not None:
                rec["parent"] += offset
            records.append(rec)
        offset += len(tree)
        texts.append(f"# component {k}: {'YES' if d.accept else 'NO'}\n" + io.tree_to_text(tree, d.labels, lab))
        dots.append(io.tree_to_dot(tree, d.labels, lab, name=f"abc{k}"))
    if args.json:
        print(json.dumps(records, indent=2))
    elif args.dot:
        sys.stdout.write("".join(dots))
    else:
        sys.stdout.write("".join(texts))
    return 0


def cmd_oracle(args) -> int:
    g, _ = _load(args)
    parts = split_components(g)
    if args.question == "decide":
        ok = all(oracle.exists_rmis_bf(sub) is not None for sub, _ in parts)
    else:
        ok = all(oracle.forall_rmis_bf(sub) for sub, _ in parts)
    print("YES" if ok else "NO")
    return 0 if ok else 1


def _gen_graph(family: str, params: list[str], seed: Optional[int]) -> Graph:
    def ints(k):
        if len(params) != k:
            raise UsageError(f"{family} takes {k} integer parameter(s)")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise UsageError(f"{family} parameters must be integers") from None

    if family == "path":
        (n,) = ints(1)
        return generators.path_graph(n)
    if family == "cycle":
        (n,) = ints(1)
        return generators.cycle_graph(n)
    if family == "complete_bipartite":
        a, b = ints(2)
        return generators.complete_bipartite_graph(a, b)
    if family == "star":
        (n,) = ints(1)
        return generators.star_graph(n)
    if family == "sputnik":
        if len(params) != 1:
            raise UsageError("sputnik takes a base graph file")
        base, _ = io.parse_graph(Path(params[0]).read_text())
        return generators.sputnik_from(base)
    if family == "random_connected":
        if len(params) not in (2, 3):
            raise UsageError("random_connected takes n p [seed]")
        try:
            n, p = int(params[0]), float(params[1])
            s = int(params[2]) if len(params) == 3 else (seed or 0)
        except ValueError:
            raise UsageError("random_connected takes n p [seed]") from None
        if s < 0 or s >= 2**64:
            raise UsageError("seed must be a 64-bit unsigned integer")
        return generators.random_connected(n, p, s)
    if family == "fixture_component_b":
        ints(0)
        return generators.fixture_component_b()[0]
    raise UsageError(f"unknown family {family!r}")


def cmd_gen(args) -> int:
    g = _gen_graph(args.family, args.params, args.seed)
    sys.stdout.write(io.to_dimacs(g) if args.output_format == "dimacs" else io.to_edgelist(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmis", description="Robust maximal independent sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.add_argument("--format", choices=["auto", "edgelist", "dimacs"], default="auto")
        p.set_defaults(func=func)
        return p

    with_file("decide", cmd_decide, "does a robust MIS exist (YES/NO)")
    with_file("construct", cmd_construct, "print a robust MIS or NONE")
    p = with_file("verify", cmd_verify, "check a vertex set for robustness")
    p.add_argument("--mis", required=True, help='comma-separated vertex ids, e.g. "0,3,4"')
    with_file("classify", cmd_classify, "ALL_ROBUST / SOME_ROBUST / NONE_ROBUST")
    p = with_file("decompose", cmd_decompose, "print the labeled decomposition tree")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--dot", action="store_true")
    group.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="brute-force counterparts")
    p.add_argument("question", choices=["decide", "forall"])
    p.add_argument("file")
    p.add_argument("--format", choices=["auto", "edgelist", "dimacs"], default="auto")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output-format", choices=["edgelist", "dimacs"], default="edgelist")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except oracle.OracleRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (io.ParseError, UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
