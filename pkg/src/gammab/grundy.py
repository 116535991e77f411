"""First-Fit coloring and the Grundy number.

Colorings are tuples indexed by vertex holding colors ``1..k``.
"""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError, iter_bits

ORACLE_MAX_N = 9


def _check_order(g: Graph, order: Sequence[int]) -> None:
    if sorted(order) != list(range(g.n)):
        raise GraphError(f"ordering {list(order)} is not a permutation of 0..{g.n - 1}")


def _least_free(used: int) -> int:
    # used has bit c-1 set when color c is taken
    return (~used & (used + 1)).bit_length()


def first_fit(g: Graph, order: Sequence[int]) -> tuple[int, ...]:
    """Greedy coloring: each vertex takes the least color absent among its colored neighbours."""
    _check_order(g, order)
    colors = [0] * g.n
    for v in order:
        used = 0
        for u in iter_bits(g.adj[v]):
            if colors[u]:
                used |= 1 << (colors[u] - 1)
        colors[v] = _least_free(used)
    return tuple(colors)


def is_grundy_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n or any(c < 1 for c in colors):
        return False
    for v in range(g.n):
        seen = 0
        for u in iter_bits(g.adj[v]):
            if colors[u] == colors[v]:
                return False
            seen |= 1 << (colors[u] - 1)
        need = (1 << (colors[v] - 1)) - 1
        if seen & need != need:
            return False
    return True


def coloring_to_order(colors: Sequence[int]) -> tuple[int, ...]:
    """Vertices sorted by (color, index); First-Fit on it reproduces a Grundy coloring."""
    return tuple(sorted(range(len(colors)), key=lambda v: (colors[v], v)))


class _GrundySolver:
    """Exact Γ via chains of maximal independent sets.

    A First-Fit run colors class 1 as a maximal independent set of G, class 2
    as a maximal independent set of what is left, and so on; conversely every
    such chain is realised by First-Fit. So Γ(G[R]) = 1 + max Γ(G[R - I]) over
    maximal independent sets I of G[R], memoised on R.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[int, tuple[int, int]] = {}
        self.bounds: dict[int, int] = {}

    def bound(self, rest: int) -> int:
        # a k-class Grundy coloring has, for c = 1..k, a vertex of color c and
        # degree >= c-1, all distinct: so k <= d_j + j for every j
        b = self.bounds.get(rest)
        if b is None:
            adj = self.g.adj
            degs = sorted(((adj[v] & rest).bit_count() for v in iter_bits(rest)), reverse=True)
            b = len(degs)
            for j, d in enumerate(degs, 1):
                if d + j < b:
                    b = d + j
            self.bounds[rest] = b
        return b

    def maximal_independent_sets(self, rest: int):
        # Bron-Kerbosch with pivoting on the complement of G[rest]
        adj = self.g.adj

        def non_nbrs(v: int) -> int:
            return rest & ~adj[v] & ~(1 << v)

        def bk(chosen: int, cand: int, excl: int):
            if not cand and not excl:
                yield chosen
                return
            pool = cand | excl
            pivot = max(iter_bits(pool), key=lambda u: (non_nbrs(u) & cand).bit_count())
            for v in iter_bits(cand & ~non_nbrs(pivot)):
                bit = 1 << v
                nv = non_nbrs(v)
                yield from bk(chosen | bit, cand & nv, excl & nv)
                cand &= ~bit
                excl |= bit

        yield from bk(0, rest, 0)

    def solve(self, rest: int) -> int:
        if not rest:
            return 0
        hit = self.memo.get(rest)
        if hit is not None:
            return hit[0]
        ub = self.bound(rest)
        best, arg = 0, 0
        for ind in self.maximal_independent_sets(rest):
            left = rest & ~ind
            if 1 + self.bound(left) <= best:
                continue
            val = 1 + self.solve(left)
            if val > best:
                best, arg = val, ind
                if best >= ub:
                    break
        self.memo[rest] = (best, arg)
        return best

    def classes(self) -> list[int]:
        rest = self.g.vertex_mask
        out = []
        while rest:
            self.solve(rest)
            ind = self.memo[rest][1]
            out.append(ind)
            rest &= ~ind
        return out


def grundy_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return Γ(g) and an ordering on which First-Fit uses exactly Γ(g) colors."""
    if g.n < 1:
        raise GraphError("Grundy number is undefined for the empty graph")
    solver = _GrundySolver(g)
    value = solver.solve(g.vertex_mask)
    order = []
    for ind in solver.classes():
        order.extend(iter_bits(ind))
    return value, tuple(order)


def grundy_oracle_search(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Try First-Fit on every ordering; return the best count and its first ordering."""
    if g.n < 1:
        raise GraphError("Grundy number is undefined for the empty graph")
    if g.n > ORACLE_MAX_N:
        raise GraphError(f"oracle refuses n={g.n} > {ORACLE_MAX_N} (factorial cost)")
    n, adj = g.n, g.adj
    colors = [0] * n
    order: list[int] = []
    best = [0, ()]

    def rec(left: int, top: int) -> None:
        if not left:
            if top > best[0]:
                best[0], best[1] = top, tuple(order)
            return
        for v in iter_bits(left):
            used = 0
            for u in iter_bits(adj[v]):
                if colors[u]:
                    used |= 1 << (colors[u] - 1)
            c = _least_free(used)
            colors[v] = c
            order.append(v)
            rec(left & ~(1 << v), max(top, c))
            order.pop()
            colors[v] = 0

    rec(g.vertex_mask, 0)
    return best[0], best[1]


def grundy_oracle(g: Graph) -> int:
    return grundy_oracle_search(g)[0]
