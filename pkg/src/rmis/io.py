"""Edge-list and DIMACS graph files, plus DOT/JSON dumps of the decomposition tree.

Edge lists hold one ``u v`` pair per line with ``#`` comments. An optional
first line ``n m`` is read as a header when exactly ``m`` edge lines follow
and every id is below ``n``; ids are then kept as they are. Without a
header the distinct ids are compacted to ``0..k-1`` in ascending order.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

from .decomposition import AbcTree, NodeKind
from .graph import Graph, new_graph


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _data_lines(text: str, comment: tuple[str, ...]) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        out.append((no, line.split()))
    return out


def _ints(tokens: list[str], no: int, count: int) -> list[int]:
    if len(tokens) != count:
        raise ParseError(f"expected {count} integers, got {' '.join(tokens)!r}", no)
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"not an integer in {' '.join(tokens)!r}", no) from None
    if any(v < 0 for v in vals):
        raise ParseError("negative vertex id", no)
    return vals


def _check_pairs(pairs: list[tuple[int, int, int]]) -> None:
    seen = {}
    for no, u, v in pairs:
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v} (first on line {seen[key]})", no)
        seen[key] = no


def parse_edgelist(text: str) -> tuple[Graph, list[int]]:
    lines = _data_lines(text, ("#",))
    pairs = [(no, *_ints(tok, no, 2)) for no, tok in lines]
    if pairs:
        no, n, m = pairs[0]
        rest = pairs[1:]
        if m == len(rest) and all(u < n and v < n for _, u, v in rest):
            _check_pairs(rest)
            return new_graph(n, [(u, v) for _, u, v in rest]), list(range(n))
    _check_pairs(pairs)
    labels = sorted({x for _, u, v in pairs for x in (u, v)})
    idx = {x: i for i, x in enumerate(labels)}
    return new_graph(len(labels), [(idx[u], idx[v]) for _, u, v in pairs]), labels


def parse_dimacs(text: str) -> tuple[Graph, list[int]]:
    lines = _data_lines(text, ("c",))
    if not lines or lines[0][1][0] != "p":
        raise ParseError("missing 'p edge N M' header", lines[0][0] if lines else None)
    no, tok = lines[0]
    if len(tok) != 4 or tok[1] not in ("edge", "col"):
        raise ParseError("header must read 'p edge N M'", no)
    n, m = _ints(tok[2:], no, 2)
    pairs = []
    for no, tok in lines[1:]:
        if tok[0] != "e":
            raise ParseError(f"unexpected record {tok[0]!r}", no)
        u, v = _ints(tok[1:], no, 2)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex id outside [1, {n}]", no)
        pairs.append((no, u, v))
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges, found {len(pairs)}")
    _check_pairs(pairs)
    return new_graph(n, [(u - 1, v - 1) for _, u, v in pairs]), list(range(1, n + 1))


def sniff_format(text: str) -> str:
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("p "):
            return "dimacs"
        if s and not s.startswith(("#", "c ")) and s != "c":
            return "edgelist"
    return "edgelist"


def parse_graph(source: Union[str, Path], fmt: str = "auto") -> tuple[Graph, list[int]]:
    """Parse a graph from a path or from document text.

    Returns the graph and ``labels`` where ``labels[i]`` is the original id
    of dense vertex ``i``.
    """
    if isinstance(source, Path) or ("\n" not in source and Path(source).is_file()):
        text = Path(source).read_text()
    else:
        text = source
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}")


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- decomposition tree dumps ------------------------------------------------


def _payload(node, labels: list) -> Union[int, list]:
    if node.kind in (NodeKind.ARTICULATION, NodeKind.PENDANT):
        return labels[node.payload]
    return sorted(labels[v] for v in node.payload)


def tree_records(tree: AbcTree, node_labels: Optional[dict] = None, vertex_labels: Optional[list] = None) -> list[dict]:
    vertex_labels = vertex_labels or list(range(tree.graph.n))
    node_labels = node_labels or {}
    out = []
    for x, node in enumerate(tree.nodes):
        att = tree.attachment[x]
        out.append(
            {
                "node_id": x,
                "kind": node.kind.value,
                "payload": _payload(node, vertex_labels),
                "parent": tree.parent[x],
                "attachment": None if att is None else vertex_labels[att],
                "labels": node_labels[x].names() if x in node_labels else [],
            }
        )
    return out


def tree_to_json(tree: AbcTree, node_labels=None, vertex_labels=None) -> str:
    return json.dumps(tree_records(tree, node_labels, vertex_labels), indent=2)


_SHAPES = {
    NodeKind.PENDANT: 'shape=circle, width=0.3, fixedsize=true',
    NodeKind.ARTICULATION: "shape=diamond",
    NodeKind.BRIDGE: "shape=box",
    NodeKind.COMPONENT: 'shape=circle, width=1.2',
}


def tree_to_dot(tree: AbcTree, node_labels=None, vertex_labels=None, name: str = "abc") -> str:
    lines = [f"graph {name} {{"]
    for rec in tree_records(tree, node_labels, vertex_labels):
        kind = NodeKind(rec["kind"])
        text = f"{rec['kind']} {rec['payload']}"
        if rec["labels"]:
            text += "\\n" + ",".join(rec["labels"])
        lines.append(f'  n{rec["node_id"]} [label="{text}", {_SHAPES[kind]}];')
    for x, p in enumerate(tree.parent):
        if p is not None:
            lines.append(f"  n{p} -- n{x};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_text(tree: AbcTree, node_labels=None, vertex_labels=None) -> str:
    recs = tree_records(tree, node_labels, vertex_labels)
    out = []
    for x in _preorder(tree):
        rec = recs[x]
        depth = 0
        p = tree.parent[x]
        while p is not None:
            depth += 1
            p = tree.parent[p]
        lab = " " + ",".join(rec["labels"]) if rec["labels"] else ""
        att = "" if rec["attachment"] is None else f" v={rec['attachment']}"
        out.append(f"{'  ' * depth}{rec['kind']} {rec['payload']}{att}{lab}")
    return "\n".join(out) + "\n"


def _preorder(tree: AbcTree) -> list[int]:
    out, stack = [], [tree.root]
    while stack:
        x = stack.pop()
        out.append(x)
        stack.extend(reversed(tree.children[x]))
    return out
