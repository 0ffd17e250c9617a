"""Exhaustive backtracking search for minimum-delay balanced designs.

Cells are filled row-major, each trying 0, z1, -z1, z1*, -z1*, z2, ... in
that order, so the first complete design found is the lexicographically
smallest one left after symmetry fixing.  Every pruning rule is a necessary
condition for a BCOD:

* each row has m zeros and is conjugation uniform;
* each variable occurs exactly once per column and at most once per row
  (otherwise some |z_j|^2 or z_j z_j term can never cancel);
* a term conj(u) v in columns (a, c) can only be cancelled by the row holding
  v in column a, which must then hold u in column c with the opposite sign
  product and the complementary conjugations.

With symmetry fixing on, the first row is 0..0 z1..zm (pick a nonconjugated
row, move its zeros left, negate columns, rename its variables) and rows
2..p are strictly increasing.  Complete grids are accepted only if they
pass the full COD and BCOD checks.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .axioms import is_bcod
from .core import Design, VarRef, token_key
from .errors import ConfigError, NotCod, SearchLimitExceeded
from .gram import is_cod

log = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 20_000_000
_SPLIT_CELLS = 3


@dataclass(frozen=True)
class SearchConfig:
    n: int
    p_max: int
    symmetry_pruning: bool = True
    parallel_width: int = 1
    node_limit: int = DEFAULT_NODE_LIMIT
    long_run: bool = False

    def validate(self):
        if self.n < 2 or self.n % 2:
            raise ConfigError(f"n must be even and >= 2, got {self.n}")
        if self.n > 4 and not (self.n == 6 and self.long_run):
            raise ConfigError(f"n={self.n} needs n <= 4 (n = 6 only with long_run)")
        if self.p_max < 0:
            raise ConfigError(f"p_max must be >= 0, got {self.p_max}")
        if self.parallel_width < 1:
            raise ConfigError("parallel_width must be >= 1")


@dataclass
class SearchResult:
    design: Optional[Design]
    exhausted: list = field(default_factory=list)  # p values proven empty
    nodes: dict = field(default_factory=dict)  # p -> nodes visited


class _Limit(Exception):
    pass


class _Grid:
    def __init__(self, n, p, symmetry, node_limit):
        self.n, self.p, self.m, self.k = n, p, n // 2, p // 2
        self.symmetry = symmetry
        self.node_limit = node_limit
        self.nodes = 0
        self.cells = [None] * (n * p)
        self.row_zeros = [0] * p
        self.row_nz = [0] * p
        self.col_zeros = [0] * n
        self.col_nz = [0] * n
        self.row_vars = [set() for _ in range(p)]
        self.col_pos = [{} for _ in range(n)]
        self.row_conj = [None] * p
        self.tight = [False] * p
        self.domain = [None] + sorted(
            (VarRef(v, s, cj) for v in range(1, self.k + 1) for s in (1, -1) for cj in (False, True)),
            key=token_key,
        )
        self.start = 0
        self.feasible = True
        if symmetry:
            if self.k < self.m:
                self.feasible = False
                return
            first = [None] * self.m + [VarRef(v) for v in range(1, self.m + 1)]
            for pos, e in enumerate(first):
                if self.place(pos, e) is None:
                    self.feasible = False
                    return
            self.start = n

    def at(self, r, c):
        return self.cells[r * self.n + c]

    def _assigned(self, r, c, pos):
        return r * self.n + c < pos

    def place(self, pos, e) -> Optional[bool]:
        """Assign a cell; None if pruned, else the row's previous tightness flag."""
        n, m, k, p = self.n, self.m, self.k, self.p
        r, c = divmod(pos, n)
        if e is None:
            if self.row_zeros[r] >= m or self.col_zeros[c] >= p - k:
                return None
        else:
            if self.row_nz[r] >= m or self.col_nz[c] >= k:
                return None
            if e.index in self.row_vars[r] or e.index in self.col_pos[c]:
                return None
            if self.row_nz[r] and self.row_conj[r] != e.conjugated:
                return None
        tight_next = False
        if self.symmetry and r >= 2 and (c == 0 or self.tight[r]):
            prev = self.at(r - 1, c)
            kp, ke = token_key(prev), token_key(e)
            if ke < kp:
                return None
            tight_next = ke == kp
            if tight_next and c == n - 1:
                return None
        if not self._pairs_ok(r, c, e, pos):
            return None

        self.cells[pos] = e
        prev_tight = self.tight[r]
        self.tight[r] = tight_next
        if e is None:
            self.row_zeros[r] += 1
            self.col_zeros[c] += 1
        else:
            self.row_nz[r] += 1
            self.col_nz[c] += 1
            self.row_vars[r].add(e.index)
            self.col_pos[c][e.index] = r
            self.row_conj[r] = e.conjugated
        return prev_tight

    def unplace(self, pos, e, prev_tight):
        r, c = divmod(pos, self.n)
        self.cells[pos] = None
        self.tight[r] = prev_tight
        if e is None:
            self.row_zeros[r] -= 1
            self.col_zeros[c] -= 1
        else:
            self.row_nz[r] -= 1
            self.col_nz[c] -= 1
            self.row_vars[r].discard(e.index)
            del self.col_pos[c][e.index]
            if not self.row_nz[r]:
                self.row_conj[r] = None

    def _pairs_ok(self, r, c, e, pos) -> bool:
        for a in range(c):
            f = self.at(r, a)
            if f is None and e is None:
                continue
            if f is None or e is None:
                # the nonzero cell's variable w forces this row to be the partner
                # of the row holding w in the zero cell's column
                w, x, y = (f, a, c) if e is None else (e, c, a)
                r0 = self.col_pos[y].get(w.index)
                if r0 is not None and self._assigned(r0, x, pos) and self.at(r0, x) is not None:
                    return False
                continue
            u, v = f, e
            r1 = self.col_pos[a].get(v.index)
            if r1 is not None:
                g = self.at(r1, a)
                if g.conjugated == v.conjugated:
                    return False
                if self._assigned(r1, c, pos):
                    h = self.at(r1, c)
                    if h is None or h.index != u.index or h.conjugated == u.conjugated:
                        return False
                    if g.sign * h.sign != -u.sign * v.sign:
                        return False
                elif u.index in self.col_pos[c]:
                    return False
            else:
                r2 = self.col_pos[c].get(u.index)
                if r2 is not None:
                    return False
        return True

    def solve(self, pos) -> Optional[Design]:
        if pos == len(self.cells):
            return self._finish()
        for e in self.domain:
            state = self.place(pos, e)
            if state is None:
                continue
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise _Limit
            found = self.solve(pos + 1)
            self.unplace(pos, e, state)
            if found is not None:
                return found
        return None

    def prefixes(self, pos, stop, acc):
        """Yield every consistent assignment of cells pos..stop-1."""
        if pos == stop:
            yield list(acc)
            return
        for e in self.domain:
            state = self.place(pos, e)
            if state is None:
                continue
            acc.append(e)
            yield from self.prefixes(pos + 1, stop, acc)
            acc.pop()
            self.unplace(pos, e, state)

    def _finish(self) -> Optional[Design]:
        grid = tuple(tuple(self.cells[r * self.n : (r + 1) * self.n]) for r in range(self.p))
        d = Design(self.p, self.n, self.k, grid)
        if not is_cod(d):
            return None
        try:
            return d if is_bcod(d) else None
        except NotCod:
            return None


def _run_task(args):
    n, p, symmetry, node_limit, prefix = args
    g = _Grid(n, p, symmetry, node_limit)
    for i, e in enumerate(prefix):
        if g.place(g.start + i, e) is None:
            raise AssertionError("prefix replay failed")
    try:
        found = g.solve(g.start + len(prefix))
    except _Limit:
        return None, g.nodes, True
    return found, g.nodes, False


def _search_p(n, p, cfg: SearchConfig, pool):
    """(design or None, nodes) for exactly p rows; raises SearchLimitExceeded."""
    g = _Grid(n, p, cfg.symmetry_pruning, cfg.node_limit)
    if not g.feasible:
        return None, 0
    stop = min(g.start + _SPLIT_CELLS, len(g.cells))
    tasks = [
        (n, p, cfg.symmetry_pruning, cfg.node_limit, prefix)
        for prefix in g.prefixes(g.start, stop, [])
    ]
    nodes = len(tasks)
    if pool is None:
        results = (_run_task(t) for t in tasks)
    else:
        results = pool.map(_run_task, tasks)
    for found, used, exceeded in results:
        nodes += used
        if exceeded:
            raise SearchLimitExceeded(f"node limit {cfg.node_limit} reached at p={p}")
        if found is not None:
            return found, nodes
    return None, nodes


def search_min_delay(cfg: SearchConfig) -> SearchResult:
    """Fewest-row BCOD with cfg.n columns and at most cfg.p_max rows.

    Tries p = 2, 4, ... up to p_max.  ``result.design`` is None only when
    every such p was searched to exhaustion, which certifies that no BCOD
    with p <= p_max exists.  Runs out of budget raise SearchLimitExceeded.
    The answer does not depend on ``parallel_width``.
    """
    cfg.validate()
    result = SearchResult(None)
    pool = ProcessPoolExecutor(cfg.parallel_width) if cfg.parallel_width > 1 else None
    try:
        for p in range(2, cfg.p_max + 1, 2):
            found, nodes = _search_p(cfg.n, p, cfg, pool)
            result.nodes[p] = nodes
            log.info("n=%d p=%d nodes=%d found=%s", cfg.n, p, nodes, found is not None)
            if found is not None:
                result.design = found
                return result
            result.exhausted.append(p)
    finally:
        if pool is not None:
            pool.shutdown()
    return result
