"""Atomicity via the variable adjacency graph.

Two variables are adjacent when some row holds both, which is the same as
their B blocks sharing a row.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import is_bcod
from .core import Design, submatrix
from .errors import NotBcod


@dataclass(frozen=True)
class VarGraph:
    k: int
    edges: frozenset  # of (s, t) with s < t

    def neighbours(self, v: int) -> list:
        return sorted({t for s, t in self.edges if s == v} | {s for s, t in self.edges if t == v})

    def components(self) -> list:
        seen, comps = set(), []
        for root in range(1, self.k + 1):
            if root in seen:
                continue
            comp, stack = set(), [root]
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(self.neighbours(v))
            seen |= comp
            comps.append(sorted(comp))
        return comps


def _require_bcod(d: Design):
    if not is_bcod(d):
        raise NotBcod("design is not a balanced complex orthogonal design")


def variable_graph(d: Design) -> VarGraph:
    edges = set()
    for row in d.grid:
        vs = sorted({e.index for e in row if e is not None})
        edges.update((s, t) for i, s in enumerate(vs) for t in vs[i + 1 :])
    return VarGraph(d.k, frozenset(edges))


def adjacency_graph(d: Design) -> VarGraph:
    _require_bcod(d)
    return variable_graph(d)


def is_atomic(d: Design) -> bool:
    return len(adjacency_graph(d).components()) == 1


def atomic_components(d: Design) -> list:
    """Connected components as ``(variables, rows)`` pairs of sorted lists."""
    comps = []
    for vs in adjacency_graph(d).components():
        vset = set(vs)
        rows = [r for r in range(1, d.p + 1) if d.row_vars(r) & vset]
        comps.append((vs, rows))
    return comps


def component_design(d: Design, rows) -> Design:
    """The row submatrix of a component, variables renumbered from 1."""
    return submatrix(d, rows)
