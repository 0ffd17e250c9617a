"""Standard form and the column-restricted reduction to any B_j form."""

from __future__ import annotations

from collections import deque
from typing import Optional

from .atomic import variable_graph
from .axioms import is_bcod
from .core import Design
from .equivalence import (
    ColNeg,
    ColPerm,
    RowNeg,
    RowPerm,
    apply_ops,
    bj_column_order,
    find_bj_rows,
)
from .errors import NotBcod, NotBjCompatible, NotStandardForm, UnreachableVariable


def _in_block_form(d: Design, j: int):
    try:
        rep = find_bj_rows(d, j)
    except NotBjCompatible:
        return None
    if rep.n1 == rep.n2 == d.m and rep.skew_up_to_signs:
        return rep
    return None


def is_standard_form(d: Design) -> Optional[int]:
    """Smallest j such that d is in B_j form without column permutations.

    The B_j block must be m + m with Mj skew-symmetric once column and row
    signs are normalised (in particular Mj has a zero diagonal).
    """
    if not is_bcod(d):
        raise NotBcod("design is not a balanced complex orthogonal design")
    for j in range(1, d.k + 1):
        if _in_block_form(d, j) is not None:
            return j
    return None


def _bfs_path(d: Design, src: int, dst: int) -> list:
    graph = variable_graph(d)
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for w in graph.neighbours(v):
            if w not in prev:
                prev[w] = v
                queue.append(w)
    if dst not in prev:
        raise UnreachableVariable(f"z{dst} is not connected to z{src}; design is not atomic")
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def _normalize(d: Design, j: int) -> list:
    """Ops making the B_j block literal: skew Mj, +z_j diagonal, block rows first."""
    ops = []
    rep = find_bj_rows(d, j)
    if not rep.skew:
        for b, s in enumerate(rep.sign_fix, 1):
            if s < 0:
                ops.append(ColNeg(rep.n1 + b))
        d = apply_ops(d, ops)
        rep = find_bj_rows(d, j)
    for r, s in zip(rep.top_rows + rep.bottom_rows, rep.diag_signs):
        if s < 0:
            ops.append(RowNeg(r))
    block = rep.top_rows + rep.bottom_rows
    perm = block + tuple(r for r in range(1, d.p + 1) if r not in block)
    if perm != tuple(range(1, d.p + 1)):
        ops.append(RowPerm(perm))
    return ops


def to_bj_form(d: Design, j: int) -> tuple:
    """Column-restricted ops taking a standard-form design to B_j form.

    Walks a breadth-first path of adjacent variables from the standard-form
    witness to ``j``.  At each step the next variable sits at position (s, t)
    of the current Mj; swapping columns s <-> m+s and t <-> m+t moves all its
    nonconjugated occurrences into the left half.  Finally column and row
    negations and a row permutation make the block literal.

    Returns ``(ops, transformed_design)``.
    """
    d.check_variable(j)
    w = is_standard_form(d)
    if w is None:
        raise NotStandardForm("design is not in standard form")
    m = d.m
    ops = []
    cur = d
    path = _bfs_path(d, w, j)
    for c, v in zip(path, path[1:]):
        rep = find_bj_rows(cur, c)
        s, t = next(
            (a, b)
            for a in range(m)
            for b in range(m)
            if rep.Mj[a][b] is not None and rep.Mj[a][b].index == v
        )
        step = [ColPerm.swap(cur.n, s + 1, m + s + 1), ColPerm.swap(cur.n, t + 1, m + t + 1)]
        cur = apply_ops(cur, step)
        ops.extend(step)
        if _in_block_form(cur, v) is None:
            raise NotStandardForm(f"step z{c} -> z{v} did not reach a B_{v} form")
    tail = _normalize(cur, j)
    return ops + tail, apply_ops(cur, tail)


def standardize(d: Design) -> tuple:
    """Ops (no conjugations) bringing a BCOD into B_1 standard form.

    Designs already in standard form are returned unchanged with no ops.
    """
    if not is_bcod(d):
        raise NotBcod("design is not a balanced complex orthogonal design")
    if is_standard_form(d) is not None:
        return [], d
    order = bj_column_order(d, 1)
    ops = [] if order == tuple(range(1, d.n + 1)) else [ColPerm(order)]
    cur = apply_ops(d, ops)
    tail = _normalize(cur, 1)
    return ops + tail, apply_ops(cur, tail)

