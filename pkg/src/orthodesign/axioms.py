"""Balanced COD axioms."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import Design, row_conjugation, variable_occurrences
from .equivalence import ColPerm, apply_op, bj_column_order, find_bj_rows
from .errors import NotBjCompatible, NotCod
from .gram import Violation, is_cod

CONDITIONS = ("dimensions", "zeros", "conjugation", "skew", "footnote")


@dataclass
class BcodReport:
    """Per-condition violations; truthy iff every list is empty.

    ``zeros``, ``conjugation`` and ``skew`` are the three balanced-design
    conditions; ``footnote`` is the derived count check (z_j and z_j^* each
    m times); ``dimensions`` covers n even and p = 2k.
    """

    conditions: dict = field(default_factory=lambda: {c: [] for c in CONDITIONS})

    @property
    def ok(self) -> bool:
        return not any(self.conditions.values())

    def __bool__(self):
        return self.ok

    @property
    def violations(self) -> list:
        return [v for c in CONDITIONS for v in self.conditions[c]]


def is_bcod(d: Design) -> BcodReport:
    """Check the balanced-design conditions on a COD.

    Raises NotCod when the orthogonality check fails.  Dimension problems
    (odd n, p != 2k) are reported as failed conditions rather than raised.
    """
    return _is_bcod(d)


@lru_cache(maxsize=256)
def _is_bcod(d: Design) -> BcodReport:
    if not is_cod(d):
        raise NotCod("design is not a complex orthogonal design")
    rep = BcodReport()
    cond = rep.conditions
    if d.n % 2:
        cond["dimensions"].append(Violation("dimensions", (d.n,), f"n={d.n} is odd"))
    if d.p != 2 * d.k:
        cond["dimensions"].append(
            Violation("dimensions", (d.p, d.k), f"p={d.p} but 2k={2 * d.k}")
        )
    if cond["dimensions"]:
        return rep
    m = d.m
    for r in range(1, d.p + 1):
        zeros = sum(e is None for e in d.row(r))
        if zeros != m:
            cond["zeros"].append(Violation("zeros", (r,), f"row has {zeros} zeros, expected {m}"))
        if row_conjugation(d, r) is None:
            cond["conjugation"].append(
                Violation("conjugation", (r,), "row mixes conjugated and nonconjugated entries")
            )
    for j in range(1, d.k + 1):
        occ = variable_occurrences(d, j)
        plain = sum(not cj for *_, cj in occ)
        conj = len(occ) - plain
        if plain != m or conj != m:
            cond["footnote"].append(
                Violation("footnote", (j,), f"z{j} appears {plain} times, z{j}* {conj} times, expected {m} each")
            )
        cond["skew"].extend(_skew_violations(d, j, plain, conj))
    return rep


def _skew_violations(d: Design, j: int, plain: int, conj: int) -> list:
    if plain != conj:
        return [Violation("skew", (j,), f"B_{j} split is {plain}+{conj}, Mj is not square")]
    order = bj_column_order(d, j)
    if order is None:
        return [Violation("skew", (j,), f"rows of z{j} do not pair into a B_{j} block")]
    try:
        rep = find_bj_rows(apply_op(d, ColPerm(order)), j)
    except NotBjCompatible as exc:
        return [Violation("skew", (j,), str(exc))]
    if not rep.skew_up_to_signs:
        return [Violation("skew", (j,), f"M_{j} is not skew-symmetric")]
    return []
