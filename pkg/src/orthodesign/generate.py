"""Delay-2^m balanced designs.

The zero pattern and variable layout of a standard-form BCOD [2^m, 2m, 2^(m-1)]
is forced: there is one nonconjugated row N_a for every odd-weight a in
F_2^m, holding in column pair (i, m+i) the variable labelled a + e_i, at
column i when a_i = 1 and at column m+i otherwise.  Its complement C_a holds
the conjugates of the same variables in the other column of each pair.
Variables are thus labelled by the even-weight vectors of F_2^m, with the
zero vector as z_1.

Only the signs are free.  Every orthogonality and skew-symmetry requirement
is a parity condition on four sign bits, so the signs come from Gaussian
elimination over GF(2) with free bits set to +.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import Design, VarRef
from .errors import ConfigError, SearchFailed

M_MAX = 8


def base_bcod() -> Design:
    return Design.from_rows(["z1 0", "0 z1*"])


def _order_key(bits):
    return (sum(bits), tuple(-b for b in bits))


def _layout(m: int):
    """Rows as lists of (column, label, conjugated) in coordinate order."""
    vecs = list(itertools.product((0, 1), repeat=m))
    odd = sorted((v for v in vecs if sum(v) % 2), key=_order_key)
    even = sorted((v for v in vecs if sum(v) % 2 == 0), key=_order_key)
    label = {v: n for n, v in enumerate(even, 1)}
    unit = [tuple(int(x == i) for x in range(m)) for i in range(m)]
    rest = [a for a in odd if a not in unit]

    def xor_e(a, i):
        return tuple(b ^ (x == i) for x, b in enumerate(a))

    def nrow(a):
        return [((i if a[i] else m + i), label[xor_e(a, i)], False) for i in range(m)]

    def crow(a):
        return [((m + i if a[i] else i), label[xor_e(a, i)], True) for i in range(m)]

    keys = [("N", a) for a in unit] + [("C", a) for a in unit]
    keys += [("N", a) for a in rest] + [("C", a) for a in rest]
    rows = [nrow(a) if kind == "N" else crow(a) for kind, a in keys]
    return keys, rows, label


class _GF2System:
    def __init__(self, nvars):
        self.nvars = nvars
        self.pivots = {}  # pivot bit -> (mask, rhs)

    def add(self, bits, rhs):
        mask = 0
        for b in bits:
            mask ^= 1 << b
        for piv in sorted(self.pivots, reverse=True):
            if mask >> piv & 1:
                pm, pr = self.pivots[piv]
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                raise SearchFailed("sign system is inconsistent")
            return
        piv = mask.bit_length() - 1
        for other, (om, orhs) in list(self.pivots.items()):
            if om >> piv & 1:
                self.pivots[other] = (om ^ mask, orhs ^ rhs)
        self.pivots[piv] = (mask, rhs)

    def solve(self):
        # reduced form: every pivot row contains no other pivot bit
        x = [0] * self.nvars
        for piv, (mask, rhs) in self.pivots.items():
            x[piv] = rhs  # free bits are 0
        return x


@lru_cache(maxsize=None)
def construct_bcod(m: int) -> Design:
    """Standard-form BCOD [2^m, 2m, 2^(m-1)], deterministic for each m."""
    if not 1 <= m <= M_MAX:
        raise ConfigError(f"m must be in 1..{M_MAX}, got {m}")
    keys, rows, label = _layout(m)
    p, n = len(rows), 2 * m
    unknown = {(r, i): r * m + i for r in range(p) for i in range(m)}
    system = _GF2System(p * m)

    # z_1 = label of the zero vector sits on the B_1 diagonal with sign +
    for r in range(2 * m):
        system.add([unknown[r, r % m]], 0)

    # orthogonality: each off-diagonal monomial must appear twice with opposite sign
    cell = {}
    for r, row in enumerate(rows):
        for i, (col, var, cj) in enumerate(row):
            cell[r, col] = (i, var, cj)
    for a in range(n):
        for b in range(a + 1, n):
            groups = {}
            for r in range(p):
                if (r, a) in cell and (r, b) in cell:
                    ia, va, ca = cell[r, a]
                    ib, vb, cb = cell[r, b]
                    mono = tuple(sorted([(va, not ca), (vb, cb)]))
                    groups.setdefault(mono, []).append((r, ia, ib))
            for mono, members in groups.items():
                if len(members) != 2:
                    raise SearchFailed(f"monomial {mono} appears {len(members)} times")
                (r1, a1, b1), (r2, a2, b2) = members
                system.add([unknown[r1, a1], unknown[r1, b1], unknown[r2, a2], unknown[r2, b2]], 1)

    # skew-symmetry of every M_j read in its own column frame
    row_of = {key: r for r, key in enumerate(keys)}
    evens = sorted(label, key=label.get)
    for g in evens:
        tops = [tuple(b ^ (x == a) for x, b in enumerate(g)) for a in range(m)]
        for a in range(m):
            for b in range(a + 1, m):
                ra, rb = row_of["N", tops[a]], row_of["N", tops[b]]
                bits = [unknown[ra, a], unknown[ra, b], unknown[rb, a], unknown[rb, b]]
                system.add(bits, 1)

    x = system.solve()
    grid = [[None] * n for _ in range(p)]
    for r, row in enumerate(rows):
        for i, (col, var, cj) in enumerate(row):
            grid[r][col] = VarRef(var, -1 if x[unknown[r, i]] else 1, cj)
    return Design(p, n, len(label), tuple(map(tuple, grid)))
