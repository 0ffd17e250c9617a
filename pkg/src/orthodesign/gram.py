"""Exact symbolic Gram matrix and the COD axiom check.

Every cell is a signed monomial, so each Gram entry is a formal sum of signed
products ``conj(x) * y``.  A literal is a pair ``(index, conjugated)``; the
product of two literals is stored with its factors sorted under the key
``(index, not conjugated)`` so that ``z_j^* z_j`` is ``((j, True), (j, False))``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from .core import Design, VarRef
from .errors import PreconditionViolated

Literal = tuple  # (index, conjugated)


def _lit_key(lit):
    return (lit[0], not lit[1])


@dataclass(frozen=True, order=True)
class QuadTerm:
    sign: int
    left: Literal
    right: Literal

    @classmethod
    def product(cls, sign: int, a: Literal, b: Literal) -> "QuadTerm":
        if _lit_key(b) < _lit_key(a):
            a, b = b, a
        return cls(sign, a, b)

    @property
    def monomial(self):
        return (self.left, self.right)

    def __str__(self):
        def lit(x):
            return f"z{x[0]}{'*' if x[1] else ''}"

        return f"{'+' if self.sign > 0 else '-'}{lit(self.left)} {lit(self.right)}"


def norm_term(j: int) -> QuadTerm:
    """|z_j|^2 as a QuadTerm."""
    return QuadTerm(1, (j, True), (j, False))


@dataclass(frozen=True)
class GramEntry:
    """Formal sum of QuadTerms, fully cancelled, stored as a sorted multiset."""

    terms: tuple = ()

    @classmethod
    def from_terms(cls, terms) -> "GramEntry":
        net = Counter()
        for t in terms:
            net[t.monomial] += t.sign
        out = []
        for mono, c in net.items():
            s = 1 if c > 0 else -1
            out.extend([QuadTerm(s, *mono)] * abs(c))
        return cls(tuple(sorted(out, key=lambda t: (_lit_key(t.left), _lit_key(t.right), t.sign))))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return " ".join(str(t) for t in self.terms) if self.terms else "0"


def _conj_times(x: VarRef, y: VarRef) -> QuadTerm:
    # conj(x) flips the conjugation flag of x; signs multiply.
    return QuadTerm.product(x.sign * y.sign, (x.index, not x.conjugated), (y.index, y.conjugated))


def gram(d: Design) -> tuple:
    """n x n tuple of GramEntry; entry [a][b] (0-based) is sum_r conj(G[r,a]) G[r,b]."""
    out = []
    for a in range(d.n):
        row = []
        for b in range(d.n):
            terms = [
                _conj_times(r[a], r[b]) for r in d.grid if r[a] is not None and r[b] is not None
            ]
            row.append(GramEntry.from_terms(terms))
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Violation:
    kind: str
    where: tuple
    detail: str

    def __str__(self):
        loc = ",".join(str(x) for x in self.where)
        return f"{self.kind} ({loc}): {self.detail}"


@dataclass
class Verdict:
    """Result of an axiom check.  Truthy iff no violations were found."""

    ok: bool
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def is_cod(d: Design) -> Verdict:
    """Check G^H G = I_n (|z_1|^2 + ... + |z_k|^2) symbolically."""
    g = gram(d)
    violations = []
    expected = Counter(norm_term(j) for j in range(1, d.k + 1))
    for a in range(d.n):
        for b in range(a + 1, d.n):
            if g[a][b]:
                violations.append(Violation("offdiagonal", (a + 1, b + 1), f"residual {g[a][b]}"))
        have = Counter(g[a][a].terms)
        for t, c in sorted(expected.items()):
            if have[t] == 0:
                violations.append(
                    Violation("diagonal", (a + 1, a + 1), f"missing |z{t.left[0]}|^2")
                )
            elif have[t] > 1:
                violations.append(
                    Violation("diagonal", (a + 1, a + 1), f"duplicated |z{t.left[0]}|^2 x{have[t]}")
                )
        extra = [t for t in have if t not in expected]
        if extra:
            violations.append(
                Violation("diagonal", (a + 1, a + 1), "extra terms " + " ".join(map(str, sorted(extra))))
            )

    warnings = []
    for r, row in enumerate(d.grid, 1):
        if all(e is None for e in row):
            warnings.append(f"row {r} is all zero")
        idx = [e.index for e in row if e is not None]
        if len(idx) != len(set(idx)):
            warnings.append(f"row {r} holds a variable more than once")
    return Verdict(not violations, violations, warnings)


class TwoByTwoClass(enum.Enum):
    ALAMOUTI = "Alamouti"
    DIAGONAL = "Diagonal"
    TRIVIAL = "Trivial"
    OTHER = "Other"


def classify_2x2(d: Design, r1: int, r2: int, c1: int, c2: int) -> TwoByTwoClass:
    """Classify the 2x2 submatrix on rows (r1, r2), columns (c1, c2).

    The cells (r1, c1) and (r2, c2) must carry the same variable.  The three
    named shapes are taken up to negation and conjugation, which leaves the
    following invariants: for Alamouti both the diagonal pair and the
    off-diagonal pair have opposite conjugations and the product of the four
    signs is -1.
    """
    a, b = d[r1, c1], d[r2, c2]
    if a is None or b is None or a.index != b.index:
        raise PreconditionViolated(
            f"diagonal cells ({r1},{c1}) and ({r2},{c2}) do not hold the same variable"
        )
    x, y = d[r1, c2], d[r2, c1]
    if x is None and y is None:
        return TwoByTwoClass.DIAGONAL if a.conjugated != b.conjugated else TwoByTwoClass.TRIVIAL
    if (
        x is not None
        and y is not None
        and x.index == y.index != a.index
        and a.conjugated != b.conjugated
        and x.conjugated != y.conjugated
        and a.sign * b.sign * x.sign * y.sign == -1
    ):
        return TwoByTwoClass.ALAMOUTI
    return TwoByTwoClass.OTHER
