"""Zero patterns, complements, the weight-raising step and delay bounds.

Bit convention: bit c of a zero pattern is 1 iff the row is NONZERO in
column c.  The left pattern is the first m bits.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .axioms import is_bcod
from .core import Design, row_conjugation
from .errors import (
    MultipleComplements,
    NoComplement,
    NotBcod,
    NotConjugationSeparated,
    NotStandardForm,
    PreconditionViolated,
    SearchFailed,
)
from .standard import is_standard_form


@dataclass(frozen=True, order=True)
class Pattern:
    bits: tuple

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def flip(self, *positions: int) -> "Pattern":
        """Toggle the given 1-based positions."""
        bits = list(self.bits)
        for i in positions:
            bits[i - 1] ^= 1
        return Pattern(tuple(bits))

    def complement(self) -> "Pattern":
        return Pattern(tuple(1 - b for b in self.bits))

    @classmethod
    def parse(cls, s: str) -> "Pattern":
        return cls(tuple(int(ch) for ch in s))

    def __str__(self):
        return "".join(map(str, self.bits))


ZeroPattern = Pattern
LeftPattern = Pattern


class ConjClass(enum.Enum):
    NON = "non"
    CONJ = "conj"

    def __str__(self):
        return self.value


def zero_pattern(d: Design, r: int) -> Pattern:
    d.check_row(r)
    return Pattern(tuple(int(e is not None) for e in d.row(r)))


def left_pattern(d: Design, r: int) -> Pattern:
    if d.n % 2:
        raise PreconditionViolated(f"left patterns need an even column count, n={d.n}")
    return Pattern(zero_pattern(d, r).bits[: d.m])


def conj_class(d: Design, r: int) -> ConjClass:
    flag = row_conjugation(d, r)
    if flag is None:
        raise NotConjugationSeparated(f"row {r} is empty or mixes conjugations")
    return ConjClass.CONJ if flag else ConjClass.NON


def _require_bcod(d: Design):
    if not is_bcod(d):
        raise NotBcod("design is not a balanced complex orthogonal design")


def find_complement(d: Design, r: int) -> int:
    """The row with complementary support, opposite conjugation and the same variables."""
    _require_bcod(d)
    d.check_row(r)
    want = zero_pattern(d, r).complement()
    cls = conj_class(d, r)
    vars_ = d.row_vars(r)
    hits = [
        x
        for x in range(1, d.p + 1)
        if zero_pattern(d, x) == want and conj_class(d, x) != cls and d.row_vars(x) == vars_
    ]
    if not hits:
        raise NoComplement(f"row {r} has no complement")
    if len(hits) > 1:
        raise MultipleComplements(f"row {r} has complements {hits}")
    return hits[0]


def induce_step(d: Design, r: int, i: int, j: int) -> int:
    """Row with left pattern alpha + e_i + e_j and the conjugation of row r.

    alpha is the left pattern of r, with alpha(i) = alpha(j) = 0.  The
    variable sitting at r(m+i) also occurs, with the same conjugation, in
    column j of exactly one row; that row is the answer.
    """
    if is_standard_form(d) is None:
        raise NotStandardForm("design is not in standard form")
    m = d.m
    d.check_row(r)
    alpha = left_pattern(d, r)
    if alpha.weight > m - 2:
        raise PreconditionViolated(f"row {r} has left weight {alpha.weight} > m-2 = {m - 2}")
    if i == j or not (1 <= i <= m and 1 <= j <= m):
        raise PreconditionViolated(f"need distinct columns in 1..{m}, got i={i}, j={j}")
    if alpha.bits[i - 1] or alpha.bits[j - 1]:
        raise PreconditionViolated(f"alpha={alpha} is not zero at both {i} and {j}")
    pivot = d[r, m + i]
    if pivot is None:
        raise SearchFailed(f"row {r} is zero in column {m + i}")
    hits = [
        x
        for x in range(1, d.p + 1)
        if d[x, j] is not None
        and d[x, j].index == pivot.index
        and d[x, j].conjugated == pivot.conjugated
    ]
    if len(hits) != 1:
        raise SearchFailed(f"z{pivot.index} occurs {len(hits)} times in column {j} with that conjugation")
    found = hits[0]
    if left_pattern(d, found) != alpha.flip(i, j) or conj_class(d, found) != conj_class(d, r):
        raise SearchFailed(f"row {found} does not carry left pattern {alpha.flip(i, j)}")
    return found


@dataclass
class Census:
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, key):
        return self.counts[key]

    def patterns(self, cls=None) -> set:
        return {pat for (pat, c), n in self.counts.items() if n and (cls is None or c == cls)}


def census(d: Design) -> Census:
    """Number of rows per (left pattern, conjugation class)."""
    _require_bcod(d)
    return Census(Counter((left_pattern(d, r), conj_class(d, r)) for r in range(1, d.p + 1)))


@dataclass
class BoundReport:
    p: int
    m: int
    checks: list  # of (name, passed, detail)

    @property
    def target(self) -> int:
        return 2**self.m

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def __bool__(self):
        return self.ok


def all_patterns(m: int) -> list:
    return [Pattern(bits) for bits in itertools.product((0, 1), repeat=m)]


def verify_delay_bound(d: Design) -> BoundReport:
    """Check the pattern coverage that forces 2k >= 2^m on this design.

    m odd: every one of the 2^m left patterns occurs.  m even: every
    odd-weight left pattern occurs in both conjugation classes.
    """
    _require_bcod(d)
    m = d.m
    cen = census(d)
    checks = []
    if m % 2:
        missing = [p for p in all_patterns(m) if p not in cen.patterns()]
        checks.append(("all_left_patterns", not missing, f"missing {[str(p) for p in missing]}"))
    else:
        odd = [p for p in all_patterns(m) if p.weight % 2]
        for cls in ConjClass:
            missing = [p for p in odd if p not in cen.patterns(cls)]
            checks.append(
                (f"odd_patterns_{cls.value}", not missing, f"missing {[str(p) for p in missing]}")
            )
    checks.append(("rows_at_least_2^m", d.p >= 2**m, f"p={d.p}, 2^m={2**m}"))
    return BoundReport(d.p, m, checks)


def delta(n: int) -> int:
    """Radon-Hurwitz exponent: 4t, 4t+1, 4t+2, 4t+3 for n = 8t + (1 | 2 | 3,4 | 5..8)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    t, rest = divmod(n - 1, 8)
    return 4 * t + (0, 1, 2, 2, 3, 3, 3, 3)[rest]


def nu(n: int) -> int:
    return 2 ** delta(n)


def max_rate_delay_bound(n: int) -> int:
    """Least delay of a maximum-rate COD with n columns."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    m = (n + 1) // 2
    bound = comb(2 * m, m + 1)
    return 2 * bound if n % 4 == 2 else bound


def bcod_lower_bound(n: int) -> int:
    """2^m for n = 2m columns."""
    if n < 2 or n % 2:
        raise ValueError(f"balanced designs need an even n >= 2, got {n}")
    return 2 ** (n // 2)
