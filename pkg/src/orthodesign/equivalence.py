"""Equivalence operations on designs and B_j block detection.

Permutations are 1-based tuples read as "new position i takes old position
perm[i]": ``RowPerm((2, 1, 3, 4))`` swaps the first two rows.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .core import Design, VarRef, format_entry, variable_occurrences
from .errors import NotBjCompatible, ParseError


def _check_perm(perm, size, what):
    if sorted(perm) != list(range(1, size + 1)):
        raise IndexError(f"{what} {perm} is not a permutation of 1..{size}")


@dataclass(frozen=True)
class RowPerm:
    perm: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))


@dataclass(frozen=True)
class ColPerm:
    perm: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))

    @classmethod
    def swap(cls, n: int, a: int, b: int) -> "ColPerm":
        perm = list(range(1, n + 1))
        perm[a - 1], perm[b - 1] = b, a
        return cls(tuple(perm))


@dataclass(frozen=True)
class RowNeg:
    row: int


@dataclass(frozen=True)
class ColNeg:
    column: int


@dataclass(frozen=True)
class VarConj:
    var: int


@dataclass(frozen=True)
class VarNeg:
    var: int


EquivOp = Union[RowPerm, ColPerm, RowNeg, ColNeg, VarConj, VarNeg]


def _invert_perm(perm):
    inv = [0] * len(perm)
    for i, src in enumerate(perm, 1):
        inv[src - 1] = i
    return tuple(inv)


def inverse(op: EquivOp) -> EquivOp:
    if isinstance(op, RowPerm):
        return RowPerm(_invert_perm(op.perm))
    if isinstance(op, ColPerm):
        return ColPerm(_invert_perm(op.perm))
    return op  # negations and conjugations are involutions


def apply_op(d: Design, op: EquivOp) -> Design:
    grid = [list(row) for row in d.grid]
    if isinstance(op, RowPerm):
        _check_perm(op.perm, d.p, "row permutation")
        grid = [grid[i - 1] for i in op.perm]
    elif isinstance(op, ColPerm):
        _check_perm(op.perm, d.n, "column permutation")
        grid = [[row[i - 1] for i in op.perm] for row in grid]
    elif isinstance(op, RowNeg):
        d.check_row(op.row)
        grid[op.row - 1] = [None if e is None else e.negated() for e in grid[op.row - 1]]
    elif isinstance(op, ColNeg):
        d.check_column(op.column)
        for row in grid:
            e = row[op.column - 1]
            row[op.column - 1] = None if e is None else e.negated()
    elif isinstance(op, (VarConj, VarNeg)):
        d.check_variable(op.var)
        flip = VarRef.conj if isinstance(op, VarConj) else VarRef.negated
        grid = [[flip(e) if e is not None and e.index == op.var else e for e in row] for row in grid]
    else:
        raise TypeError(f"not an equivalence operation: {op!r}")
    return Design(d.p, d.n, d.k, tuple(tuple(row) for row in grid))


def apply_ops(d: Design, ops: Sequence[EquivOp]) -> Design:
    for op in ops:
        d = apply_op(d, op)
    return d


def is_column_restricted(ops: Sequence[EquivOp], m: int) -> bool:
    """True iff every column permutation in ``ops`` swaps some column i with m + i.

    An identity column permutation moves nothing and is accepted.
    """
    for op in ops:
        if not isinstance(op, ColPerm):
            continue
        moved = [i for i, src in enumerate(op.perm, 1) if src != i]
        if not moved:
            continue
        if len(moved) != 2:
            return False
        a, b = moved
        if not (b == a + m and a <= m and op.perm[a - 1] == b and op.perm[b - 1] == a):
            return False
    return True


# -- op scripts ---------------------------------------------------------------

_SCRIPT_NAMES = {
    RowPerm: "rowperm",
    ColPerm: "colperm",
    RowNeg: "rowneg",
    ColNeg: "colneg",
    VarConj: "varconj",
    VarNeg: "varneg",
}
_SCRIPT_TYPES = {v: k for k, v in _SCRIPT_NAMES.items()}


def format_op(op: EquivOp) -> str:
    name = _SCRIPT_NAMES[type(op)]
    if isinstance(op, (RowPerm, ColPerm)):
        return name + " " + " ".join(map(str, op.perm))
    (arg,) = (getattr(op, f) for f in op.__dataclass_fields__)
    return f"{name} {arg}"


def format_ops(ops: Sequence[EquivOp]) -> str:
    return "\n".join(format_op(op) for op in ops)


def parse_ops(text: str) -> list:
    ops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, *args = line.split()
        if name not in _SCRIPT_TYPES or not args or not all(a.isdigit() for a in args):
            raise ParseError(f"line {lineno}: bad op {line!r}")
        cls = _SCRIPT_TYPES[name]
        if cls in (RowPerm, ColPerm):
            ops.append(cls(tuple(map(int, args))))
        elif len(args) == 1:
            ops.append(cls(int(args[0])))
        else:
            raise ParseError(f"line {lineno}: {name} takes one argument")
    return ops


# -- B_j blocks ---------------------------------------------------------------


@dataclass(frozen=True)
class BjReport:
    """The rows of variable j read as a B_j block.

    ``Mj`` is read from the top rows after each row has been (implicitly)
    negated to carry +z_j on the diagonal.  ``skew`` is the literal test
    Mj^T = -Mj.  ``sign_fix`` is a vector of +-1 over the right block columns
    such that negating the columns marked -1 makes Mj skew, or None when no
    column signs achieve that.
    """

    j: int
    top_rows: tuple
    bottom_rows: tuple
    n1: int
    n2: int
    Mj: tuple
    skew: bool
    diag_signs: tuple
    sign_fix: Optional[tuple]

    @property
    def skew_up_to_signs(self) -> bool:
        return self.sign_fix is not None

    def format_Mj(self) -> str:
        return "\n".join(" ".join(format_entry(e) for e in row) for row in self.Mj)


def _neg(e):
    return None if e is None else e.negated()


def skew_sign_fix(M) -> Optional[tuple]:
    """Column signs s with M diag(s) skew-symmetric, or None.

    Solves s_a s_b = -sign(M[a][b]) sign(M[b][a]) over each nonzero pair by
    two-colouring; the first column of each component gets +1.
    """
    size = len(M)
    if any(len(row) != size for row in M):
        return None
    adj = [[] for _ in range(size)]
    for a in range(size):
        if M[a][a] is not None:
            return None
        for b in range(a + 1, size):
            x, y = M[a][b], M[b][a]
            if x is None and y is None:
                continue
            if x is None or y is None or (x.index, x.conjugated) != (y.index, y.conjugated):
                return None
            rel = -x.sign * y.sign
            adj[a].append((b, rel))
            adj[b].append((a, rel))
    s = [0] * size
    for root in range(size):
        if s[root]:
            continue
        s[root] = 1
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b, rel in adj[a]:
                want = s[a] * rel
                if s[b] == 0:
                    s[b] = want
                    queue.append(b)
                elif s[b] != want:
                    return None
    return tuple(s)


def find_bj_rows(d: Design, j: int) -> BjReport:
    """Read the rows holding z_j as a B_j block without moving any column.

    Nonconjugated occurrences must fill columns 1..n1 once each and
    conjugated ones columns n1+1..n once each; the identity blocks and the
    lower-left block -Mj^H are then checked cell by cell.
    """
    occ = variable_occurrences(d, j)
    top = sorted((c, r, s) for r, c, s, cj in occ if not cj)
    bottom = sorted((c, r, s) for r, c, s, cj in occ if cj)
    n1, n2 = len(top), len(bottom)
    if [c for c, _, _ in top] != list(range(1, n1 + 1)):
        raise NotBjCompatible(
            f"z{j} occurs in columns {[c for c, _, _ in top]}, expected 1..{n1}"
        )
    if [c for c, _, _ in bottom] != list(range(n1 + 1, n1 + n2 + 1)) or n1 + n2 != d.n:
        raise NotBjCompatible(
            f"z{j}* occurs in columns {[c for c, _, _ in bottom]}, expected {n1 + 1}..{d.n}"
        )
    top_rows = tuple(r for _, r, _ in top)
    bottom_rows = tuple(r for _, r, _ in bottom)
    if set(top_rows) & set(bottom_rows):
        raise NotBjCompatible(f"a row holds both z{j} and z{j}*")

    def normalized(r, s):
        return [e if s > 0 or e is None else e.negated() for e in d.row(r)]

    M = []
    for a, (c, r, s) in enumerate(top):
        row = normalized(r, s)
        if any(row[x] is not None for x in range(n1) if x != a):
            raise NotBjCompatible(f"row {r}: left block is not z{j} I")
        M.append(tuple(row[n1:]))
    M = tuple(M)
    for b, (c, r, s) in enumerate(bottom):
        row = normalized(r, s)
        if any(row[n1 + x] is not None for x in range(n2) if x != b):
            raise NotBjCompatible(f"row {r}: right block is not z{j}* I")
        for a in range(n1):
            want = None if M[a][b] is None else _neg(M[a][b].conj())
            if row[a] != want:
                raise NotBjCompatible(f"row {r}: lower-left block is not -Mj^H")
    skew = n1 == n2 and all(M[a][b] == _neg(M[b][a]) for a in range(n1) for b in range(n2))
    return BjReport(
        j=j,
        top_rows=top_rows,
        bottom_rows=bottom_rows,
        n1=n1,
        n2=n2,
        Mj=M,
        skew=skew,
        diag_signs=tuple(s for _, _, s in top) + tuple(s for _, _, s in bottom),
        sign_fix=skew_sign_fix(M) if n1 == n2 else None,
    )


def bj_column_order(d: Design, j: int) -> Optional[tuple]:
    """Column permutation bringing the rows of z_j into B_j shape, or None.

    Left columns are those holding z_j (ascending); each is paired with the
    single column among those holding z_j^* where its row is zero, so that
    Mj gets a zero diagonal.
    """
    occ = variable_occurrences(d, j)
    left = sorted((c, r) for r, c, _, cj in occ if not cj)
    right = {c for _, c, _, cj in occ if cj}
    if len(left) != len(right):
        return None
    order = [c for c, _ in left]
    for c, r in left:
        zeros = [x for x in right if d[r, x] is None]
        if len(zeros) != 1:
            return None
        order.append(zeros[0])
    if len(set(order)) != d.n:
        return None
    return tuple(order)
