"""Todd-Coxeter coset enumeration (HLT strategy) and small-quotient tools.

The enumeration follows the HLT scheme with union-find coincidence
processing. Completed tables are renumbered breadth-first from the subgroup
coset, so two runs (or two strategies) give identical tables.
"""
from __future__ import annotations

import os
from collections import Counter, deque
from dataclasses import dataclass
from itertools import product
from math import gcd, lcm
from typing import Sequence

from .presentation import GroupPresentation
from .words import Word, free_reduce

DEFAULT_MAX_COSETS = 10**6

COMPLETE = "Complete"
OVERFLOWED = "Overflowed"


class CosetError(ValueError):
    pass


def default_max_cosets() -> int:
    value = os.environ.get("GEOW_MAX_COSETS")
    return int(value) if value else DEFAULT_MAX_COSETS


@dataclass(frozen=True)
class CosetTable:
    """Coset action table. Columns are ``g1, g1^-1, g2, g2^-1, ...``.

    Cosets are numbered from 0; coset 0 is the subgroup itself.
    """

    presentation: GroupPresentation
    subgroup: tuple[Word, ...]
    rows: tuple[tuple[int, ...], ...]
    status: str
    bound: int

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    @property
    def index(self) -> int:
        if not self.complete:
            raise CosetError(f"enumeration overflowed at {self.bound} cosets")
        return len(self.rows)

    def column(self, symbol: str, sign: int = 1) -> int:
        g = self.presentation.generators.index(symbol)
        return 2 * g + (0 if sign > 0 else 1)

    def act(self, coset: int, w: Word) -> int:
        for s, e in w.letters():
            coset = self.rows[coset][self.column(s, e)]
        return coset

    def permutations(self) -> list[tuple[int, ...]]:
        """One permutation of the cosets per generator (right action)."""
        return [tuple(row[2 * g] for row in self.rows) for g in range(len(self.presentation.generators))]

    def describe(self) -> str:
        status = f"{self.status}" if self.complete else f"{self.status}({self.bound})"
        lines = [f"status: {status}"]
        if self.complete:
            lines.append(f"index: {self.index}")
        return "\n".join(lines)


class _Overflow(Exception):
    pass


class _Enumerator:
    def __init__(self, pres: GroupPresentation, max_cosets: int):
        self.ngen = len(pres.generators)
        self.ncol = 2 * self.ngen
        self.idx = {g: i for i, g in enumerate(pres.generators)}
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncol]
        self.parent = [0]

    def encode(self, w: Word) -> list[int]:
        return [2 * self.idx[s] + (0 if e > 0 else 1) for s, e in w.letters()]

    def rep(self, k: int) -> int:
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def define(self, a: int, x: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise _Overflow
        b = len(self.table)
        self.table.append([None] * self.ncol)
        self.parent.append(b)
        self.table[a][x] = b
        self.table[b][x ^ 1] = a

    def merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        lo, hi = min(k, l), max(k, l)
        self.parent[hi] = lo
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncol):
                d = self.table[g][x]
                if d is None:
                    continue
                self.table[d][x ^ 1] = None
                mu, nu = self.rep(g), self.rep(d)
                if self.table[mu][x] is not None:
                    self.merge(nu, self.table[mu][x], queue)
                elif self.table[nu][x ^ 1] is not None:
                    self.merge(mu, self.table[nu][x ^ 1], queue)
                else:
                    self.table[mu][x] = nu
                    self.table[nu][x ^ 1] = mu

    def scan_and_fill(self, a: int, w: list[int]) -> None:
        if not w:
            return
        t = self.table
        f, b, i, j = a, a, 0, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] is not None:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][w[j] ^ 1] is not None:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def live(self, a: int) -> bool:
        return self.parent[a] == a

    def run(self, relators: list[list[int]], subgens: list[list[int]]) -> None:
        for w in subgens:
            self.scan_and_fill(0, w)
        a = 0
        while a < len(self.table):
            for w in relators:
                if not self.live(a):
                    break
                self.scan_and_fill(a, w)
            if self.live(a):
                for x in range(self.ncol):
                    if self.table[a][x] is None:
                        self.define(a, x)
            a += 1

    def standardized(self) -> tuple[tuple[int, ...], ...]:
        order = {0: 0}
        queue = deque([0])
        rows: list[list[int]] = []
        while queue:
            c = queue.popleft()
            row = []
            for x in range(self.ncol):
                d = self.rep(self.table[c][x])
                if d not in order:
                    order[d] = len(order)
                    queue.append(d)
                row.append(d)
            rows.append(row)
        return tuple(tuple(order[d] for d in row) for row in rows)


def coset_enumeration(p: GroupPresentation, subgens: Sequence[Word] = (), max_cosets: int | None = None) -> CosetTable:
    """Enumerate the cosets of ``<subgens>`` in the group presented by ``p``.

    Overflow is reported through ``status``; it never truncates silently.
    """
    bound = default_max_cosets() if max_cosets is None else int(max_cosets)
    if bound < 1:
        raise CosetError("max_cosets must be >= 1")
    subs = tuple(free_reduce(w, p.generators) for w in subgens)
    en = _Enumerator(p, bound)
    try:
        en.run([en.encode(r) for r in p.relators], [en.encode(w) for w in subs])
    except _Overflow:
        return CosetTable(p, subs, (), OVERFLOWED, bound)
    return CosetTable(p, subs, en.standardized(), COMPLETE, bound)


# -- normality and quotient identification ----------------------------------

def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply p then q
    return tuple(q[i] for i in p)


def _closure(gens: list[tuple[int, ...]], limit: int) -> list[tuple[int, ...]] | None:
    n = len(gens[0]) if gens else 1
    ident = tuple(range(n))
    seen = {ident}
    out = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = _compose(g, s)
            if h not in seen:
                if len(seen) >= limit:
                    return None
                seen.add(h)
                out.append(h)
                queue.append(h)
    return out


def _require_complete(t: CosetTable) -> None:
    if not t.complete:
        raise CosetError(f"coset table overflowed at {t.bound}; no verdict")


def is_normal(t: CosetTable) -> bool:
    """True iff the permutation group induced on the cosets acts regularly."""
    _require_complete(t)
    return _closure(t.permutations(), t.index) is not None


def quotient_group(t: CosetTable) -> list[tuple[int, ...]]:
    _require_complete(t)
    elems = _closure(t.permutations(), t.index)
    if elems is None:
        raise CosetError("subgroup is not normal; quotient undefined")
    return elems


def element_orders(elements: list[tuple[int, ...]]) -> Counter:
    orders = Counter()
    for g in elements:
        ident = tuple(range(len(g)))
        k, h = 1, g
        while h != ident:
            h = _compose(h, g)
            k += 1
        orders[k] += 1
    return orders


def _abelian_order_profile(factors: tuple[int, ...]) -> Counter:
    prof = Counter()
    for xs in product(*(range(d) for d in factors)):
        o = 1
        for x, d in zip(xs, factors):
            o = lcm(o, d // gcd(x, d))
        prof[o] += 1
    return prof


def _factor_chains(n: int, smallest: int = 2) -> list[tuple[int, ...]]:
    # invariant-factor chains d1 | d2 | ... with product n, each d >= 2
    if n == 1:
        return [()]
    chains = []
    for d in range(smallest, n + 1):
        if n % d == 0:
            for rest in _factor_chains(n // d, d):
                if not rest or rest[0] % d == 0:
                    chains.append((d,) + rest)
    return chains


_NONABELIAN = {
    (6, ((1, 1), (2, 3), (3, 2))): "S3",
    (8, ((1, 1), (2, 5), (4, 2))): "D4",
    (8, ((1, 1), (2, 1), (4, 6))): "Q8",
    (10, ((1, 1), (2, 5), (5, 4))): "D5",
    (12, ((1, 1), (2, 3), (3, 8))): "A4",
    (12, ((1, 1), (2, 7), (3, 2), (6, 2))): "D6",
    (12, ((1, 1), (2, 1), (3, 2), (4, 6), (6, 2))): "Dic3",
    (14, ((1, 1), (2, 7), (7, 6))): "D7",
}


def identify_group(elements: list[tuple[int, ...]]) -> str:
    n = len(elements)
    if n == 1:
        return "trivial"
    orders = element_orders(elements)
    abelian = all(_compose(a, b) == _compose(b, a) for a in elements for b in elements) if n <= 64 else False
    if abelian:
        for chain in _factor_chains(n):
            if _abelian_order_profile(chain) == orders:
                return "x".join(f"Z{d}" for d in chain)
    key = (n, tuple(sorted(orders.items())))
    if key in _NONABELIAN:
        return _NONABELIAN[key]
    profile = ",".join(f"{o}:{c}" for o, c in sorted(orders.items()))
    return f"order{n}[{profile}]"


def quotient_identify(t: CosetTable) -> str:
    """Name of ``G/H`` for a normal subgroup ``H`` of index at most 16."""
    return identify_group(quotient_group(t))
