"""2-SAT via the implication graph and Tarjan's strongly connected components."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Literal:
    var: int
    positive: bool = True

    def __invert__(self) -> "Literal":
        return Literal(self.var, not self.positive)

    def node(self) -> int:
        # implication-graph node: 2*var for x, 2*var+1 for not x
        return 2 * self.var + (0 if self.positive else 1)

    def __str__(self) -> str:
        return f"x{self.var}" if self.positive else f"~x{self.var}"


def pos(var: int) -> Literal:
    return Literal(var, True)


def neg(var: int) -> Literal:
    return Literal(var, False)


@dataclass(frozen=True)
class TwoSatFormula:
    """Conjunction of two-literal clauses; a unit clause is stored as ``(a, a)``."""

    num_vars: int
    clauses: tuple = field(default=())  # tuple[tuple[Literal, Literal], ...]

    def __str__(self) -> str:
        return " & ".join(f"({a} | {b})" for a, b in self.clauses) or "true"


def add_clause(f: TwoSatFormula, a: Literal, b: Literal) -> TwoSatFormula:
    for lit in (a, b):
        if not 0 <= lit.var < f.num_vars:
            raise ValueError(f"literal {lit} out of range for {f.num_vars} variables")
    return TwoSatFormula(f.num_vars, f.clauses + ((a, b),))


def add_unit(f: TwoSatFormula, a: Literal) -> TwoSatFormula:
    return add_clause(f, a, a)


def evaluate(clauses, assignment) -> bool:
    """True iff ``assignment`` (indexable by variable) satisfies every clause."""
    return all(
        assignment[a.var] == a.positive or assignment[b.var] == b.positive for a, b in clauses
    )


def solve_clauses(num_vars: int, clauses) -> Optional[list[bool]]:
    """Solve a raw clause list; see :func:`solve`."""
    size = 2 * num_vars
    graph: list[list[int]] = [[] for _ in range(size)]
    for a, b in clauses:
        # (a | b) gives ~a -> b and ~b -> a
        graph[a.node() ^ 1].append(b.node())
        graph[b.node() ^ 1].append(a.node())

    # iterative Tarjan; components are numbered in reverse topological order
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    comp = [-1] * size
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for start in range(size):
        if index[start] != -1:
            continue
        work = [(start, 0)]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        while work:
            v, i = work[-1]
            if i < len(graph[v]):
                work[-1] = (v, i + 1)
                w = graph[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1

    result = []
    for var in range(num_vars):
        p, q = comp[2 * var], comp[2 * var + 1]
        if p == q:
            return None
        # the literal whose component comes later in topological order is true
        result.append(p < q)
    return result


def solve(f: TwoSatFormula) -> Optional[list[bool]]:
    """A satisfying assignment (one bool per variable), or None if unsatisfiable.

    Deterministic for a given clause order. Unconstrained variables come out
    true.
    """
    return solve_clauses(f.num_vars, f.clauses)
