"""Design data model and the plain-text design file format.

A design is a p x n grid whose cells are either zero (``None``) or a signed,
optionally conjugated reference to one of the variables z_1..z_k.  Rows,
columns and variables are numbered from 1 in every public function, matching
the file format and the CLI output.

File format::

    # comment
    4 4 2
    z1 0 0 z2
    0 z1 -z2 0
    0 z2* z1* 0
    -z2* 0 0 z1*
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DesignError, ParseError

_TOKEN_RE = re.compile(r"^(-?)z([0-9]+)(\*?)$")


@dataclass(frozen=True, order=True)
class VarRef:
    """A nonzero cell: ``sign * z_index`` or ``sign * conj(z_index)``."""

    index: int
    sign: int = 1
    conjugated: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DesignError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.index < 1:
            raise DesignError(f"variable index must be >= 1, got {self.index}")

    def negated(self) -> "VarRef":
        return VarRef(self.index, -self.sign, self.conjugated)

    def conj(self) -> "VarRef":
        return VarRef(self.index, self.sign, not self.conjugated)

    def __str__(self):
        return f"{'-' if self.sign < 0 else ''}z{self.index}{'*' if self.conjugated else ''}"


Entry = Optional[VarRef]


def format_entry(e: Entry) -> str:
    return "0" if e is None else str(e)


def parse_token(tok: str) -> Entry:
    if tok == "0":
        return None
    mo = _TOKEN_RE.match(tok)
    if mo is None:
        raise ParseError(f"malformed token {tok!r}")
    index = int(mo.group(2))
    if index == 0:
        raise ParseError(f"variable index 0 in token {tok!r}")
    return VarRef(index, -1 if mo.group(1) else 1, bool(mo.group(3)))


def token_key(e: Entry) -> tuple:
    """Total order on cell tokens: 0 < z1 < -z1 < z1* < -z1* < z2 < ..."""
    if e is None:
        return (0, 0, 0, 0)
    return (1, e.index, int(e.conjugated), int(e.sign < 0))


@dataclass(frozen=True)
class Design:
    """A p x n grid of entries over k declared variables.

    Construction validates the grid: dimensions must match, every variable
    index must lie in 1..k, and every index in 1..k must be used.
    """

    p: int
    n: int
    k: int
    grid: tuple

    def __post_init__(self):
        grid = tuple(tuple(row) for row in self.grid)
        object.__setattr__(self, "grid", grid)
        if len(grid) != self.p:
            raise DesignError(f"expected {self.p} rows, got {len(grid)}")
        used = set()
        for r, row in enumerate(grid, 1):
            if len(row) != self.n:
                raise DesignError(f"row {r}: expected {self.n} entries, got {len(row)}")
            for e in row:
                if e is None:
                    continue
                if not isinstance(e, VarRef):
                    raise DesignError(f"row {r}: bad entry {e!r}")
                if e.index > self.k:
                    raise DesignError(f"row {r}: variable z{e.index} exceeds k={self.k}")
                used.add(e.index)
        missing = sorted(set(range(1, self.k + 1)) - used)
        if missing:
            raise DesignError(f"declared variables never used: {missing}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], k: Optional[int] = None) -> "Design":
        """Build a design from rows of tokens (strings) or entries."""
        grid = []
        for row in rows:
            if isinstance(row, str):
                row = row.split()
            grid.append(tuple(parse_token(x) if isinstance(x, str) else x for x in row))
        if k is None:
            k = max((e.index for row in grid for e in row if e is not None), default=0)
        return cls(len(grid), len(grid[0]) if grid else 0, k, tuple(grid))

    @property
    def m(self) -> int:
        return self.n // 2

    def __getitem__(self, rc):
        r, c = rc
        return self.grid[r - 1][c - 1]

    def row(self, r: int) -> tuple:
        return self.grid[r - 1]

    def column(self, c: int) -> tuple:
        return tuple(row[c - 1] for row in self.grid)

    def row_vars(self, r: int) -> frozenset:
        return frozenset(e.index for e in self.grid[r - 1] if e is not None)

    def check_row(self, r: int):
        if not 1 <= r <= self.p:
            raise IndexError(f"row {r} out of range 1..{self.p}")

    def check_column(self, c: int):
        if not 1 <= c <= self.n:
            raise IndexError(f"column {c} out of range 1..{self.n}")

    def check_variable(self, j: int):
        if not 1 <= j <= self.k:
            raise IndexError(f"variable {j} out of range 1..{self.k}")

    def __str__(self):
        return serialize_design(self)


def parse_design(text: str) -> Design:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line.split()))
    if not lines:
        raise ParseError("empty design")
    lineno, header = lines[0]
    if len(header) != 3 or not all(t.isdigit() for t in header):
        raise ParseError(f"line {lineno}: header must be 'p n k', got {' '.join(header)!r}")
    p, n, k = map(int, header)
    body = lines[1:]
    if len(body) != p:
        raise ParseError(f"header declares {p} rows, found {len(body)}")
    grid = []
    used = set()
    for lineno, toks in body:
        if len(toks) != n:
            raise ParseError(f"line {lineno}: expected {n} tokens, got {len(toks)}")
        row = []
        for tok in toks:
            e = parse_token(tok)
            if e is not None:
                if e.index > k:
                    raise ParseError(f"line {lineno}: variable index {e.index} exceeds k={k}")
                used.add(e.index)
            row.append(e)
        grid.append(tuple(row))
    unused = sorted(set(range(1, k + 1)) - used)
    if unused:
        raise ParseError(f"declared variables never used: {', '.join(f'z{j}' for j in unused)}")
    return Design(p, n, k, tuple(grid))


def serialize_design(d: Design) -> str:
    lines = [f"{d.p} {d.n} {d.k}"]
    lines.extend(" ".join(format_entry(e) for e in row) for row in d.grid)
    return "\n".join(lines)


def read_design(path) -> Design:
    with open(path, encoding="utf-8") as fh:
        return parse_design(fh.read())


def variable_occurrences(d: Design, j: int) -> list:
    """All cells holding variable ``j`` as ``(row, column, sign, conjugated)``, row-major."""
    d.check_variable(j)
    return [
        (r, c, e.sign, e.conjugated)
        for r, row in enumerate(d.grid, 1)
        for c, e in enumerate(row, 1)
        if e is not None and e.index == j
    ]


def row_conjugation(d: Design, r: int) -> Optional[bool]:
    """True/False when all nonzero entries of row ``r`` agree, None if mixed or empty."""
    flags = {e.conjugated for e in d.row(r) if e is not None}
    return flags.pop() if len(flags) == 1 else None


def submatrix(d: Design, rows: Iterable[int]) -> Design:
    """Row submatrix with its variables renumbered 1..k' in order of index."""
    rows = sorted(rows)
    sub = [d.row(r) for r in rows]
    present = sorted({e.index for row in sub for e in row if e is not None})
    relabel = {old: new for new, old in enumerate(present, 1)}
    grid = tuple(
        tuple(None if e is None else VarRef(relabel[e.index], e.sign, e.conjugated) for e in row)
        for row in sub
    )
    return Design(len(grid), d.n, len(present), grid)
