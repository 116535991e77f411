"""Color-dominating (b-)colorings, m(G), and exact b(G), χ(G), ω(G)."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, degree_sequence, iter_bits


def _require_vertices(g: Graph, what: str) -> None:
    if g.n < 1:
        raise GraphError(f"{what} is undefined for the empty graph")


def _check_shape(g: Graph, colors: Sequence[int]) -> None:
    if len(colors) != g.n:
        raise GraphError(f"coloring has {len(colors)} entries for {g.n} vertices")
    if any(c < 1 for c in colors):
        raise GraphError("colors must be positive integers")


def num_colors(colors: Sequence[int]) -> int:
    return len(set(colors))


def is_proper(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def compact(colors: Sequence[int]) -> tuple[int, ...]:
    """Rename the used colors to 1..k preserving their relative order."""
    rename = {c: i for i, c in enumerate(sorted(set(colors)), 1)}
    return tuple(rename[c] for c in colors)


def _is_dominating(g: Graph, colors: Sequence[int], v: int, palette: set[int]) -> bool:
    seen = {colors[u] for u in iter_bits(g.adj[v])}
    return palette - {colors[v]} <= seen


def domination_report(g: Graph, colors: Sequence[int]) -> dict[int, int | None]:
    """Map each used color to its least-indexed color-dominating vertex, or None."""
    _check_shape(g, colors)
    if not is_proper(g, colors):
        raise GraphError("domination report needs a proper coloring")
    palette = set(colors)
    report: dict[int, int | None] = {c: None for c in sorted(palette)}
    for v in range(g.n):
        c = colors[v]
        if report[c] is None and _is_dominating(g, colors, v, palette):
            report[c] = v
    return report


def is_b_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n or any(c < 1 for c in colors) or not is_proper(g, colors):
        return False
    return all(v is not None for v in domination_report(g, colors).values())


def eliminate_classes(g: Graph, colors: Sequence[int]) -> tuple[int, ...]:
    """Dissolve undominated color classes until a b-coloring remains.

    The lowest undominated class is emptied first; its vertices, in
    ascending order, each move to the lowest other class holding none of
    their neighbours. Colors are compacted after every round.
    """
    _check_shape(g, colors)
    if not is_proper(g, colors):
        raise GraphError("class elimination needs a proper coloring")
    cur = list(compact(colors))
    while True:
        report = domination_report(g, cur)
        bad = next((c for c, v in report.items() if v is None), None)
        if bad is None:
            return tuple(cur)
        palette = sorted(report)
        for v in range(g.n):
            if cur[v] != bad:
                continue
            blocked = {cur[u] for u in iter_bits(g.adj[v])}
            target = next(c for c in palette if c != bad and c not in blocked)
            cur[v] = target
        cur = list(compact(cur))


def m_number(g: Graph) -> int:
    """Largest i with d_i >= i - 1 in the non-increasing degree sequence."""
    _require_vertices(g, "m(G)")
    m = 0
    for i, d in enumerate(degree_sequence(g), 1):
        if d >= i - 1:
            m = i
        else:
            break
    return m


# clique number --------------------------------------------------------------

def max_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique (lexicographically first found), by pivoted Bron-Kerbosch with bounding."""
    _require_vertices(g, "clique number")
    adj = g.adj
    best = [0, 0]

    def expand(clique: int, size: int, cand: int, excl: int) -> None:
        if not cand:
            if not excl and size > best[0]:
                best[0], best[1] = size, clique
            return
        if size + cand.bit_count() <= best[0]:
            return
        pivot = max(iter_bits(cand | excl), key=lambda u: (adj[u] & cand).bit_count())
        for v in iter_bits(cand & ~adj[pivot]):
            bit = 1 << v
            expand(clique | bit, size + 1, cand & adj[v], excl & adj[v])
            cand &= ~bit
            excl |= bit

    expand(0, 0, g.vertex_mask, 0)
    return tuple(iter_bits(best[1]))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


# chromatic number -----------------------------------------------------------

def _k_coloring(g: Graph, k: int) -> tuple[int, ...] | None:
    n, adj = g.n, g.adj
    colors = [0] * n
    full = (1 << k) - 1

    def saturation(v: int) -> int:
        used = 0
        for u in iter_bits(adj[v]):
            if colors[u]:
                used |= 1 << (colors[u] - 1)
        return used

    def rec(done: int, top: int) -> bool:
        if done == n:
            return True
        # DSATUR choice: most distinct neighbour colors, then most uncolored neighbours
        pick, pick_used, key = -1, 0, None
        for v in range(n):
            if colors[v]:
                continue
            used = saturation(v)
            kk = (used.bit_count(), sum(1 for u in iter_bits(adj[v]) if not colors[u]), -v)
            if key is None or kk > key:
                pick, pick_used, key = v, used, kk
        free = full & ~pick_used
        # colors above top+1 are interchangeable with top+1
        free &= (1 << min(top + 1, k)) - 1
        for c0 in iter_bits(free):
            colors[pick] = c0 + 1
            if rec(done + 1, max(top, c0 + 1)):
                return True
        colors[pick] = 0
        return False

    if rec(0, 0):
        return tuple(colors)
    return None


def optimal_coloring(g: Graph) -> tuple[int, ...]:
    """A proper coloring with χ(g) colors."""
    _require_vertices(g, "chromatic number")
    k = clique_number(g)
    while True:
        col = _k_coloring(g, k)
        if col is not None:
            return col
        k += 1


def chromatic_number(g: Graph) -> int:
    return num_colors(optimal_coloring(g))


# b-chromatic number ---------------------------------------------------------

class _BSearch:
    """Proper k-coloring in which chosen dominators d_1 < ... < d_k get colors 1..k
    and each d_i sees every other color. Domains are color bitmasks (bit c-1).
    """

    def __init__(self, g: Graph, k: int, dominators: Sequence[int]):
        self.g = g
        self.k = k
        self.full = (1 << k) - 1
        self.dom = list(dominators)

    def run(self) -> tuple[int, ...] | None:
        g, k = self.g, self.k
        domains = [self.full] * g.n
        for i, d in enumerate(self.dom):
            domains[d] = 1 << i
        for d in self.dom:
            if not self._propagate(domains, d):
                return None
        if not self._dominators_ok(domains):
            return None
        return self._search(domains)

    def _propagate(self, domains: list[int], v: int) -> bool:
        # v has a singleton domain; remove its color from neighbours, cascading
        stack = [v]
        while stack:
            x = stack.pop()
            bit = domains[x]
            for u in iter_bits(self.g.adj[x]):
                du = domains[u]
                if du & bit:
                    du &= ~bit
                    if not du:
                        return False
                    domains[u] = du
                    if du & (du - 1) == 0:
                        stack.append(u)
        return True

    def _dominators_ok(self, domains: list[int]) -> bool:
        adj = self.g.adj
        for i, d in enumerate(self.dom):
            need = self.full & ~(1 << i)
            nbrs = [domains[u] for u in iter_bits(adj[d])]
            if not _has_matching(need, nbrs):
                return False
        return True

    def _search(self, domains: list[int]) -> tuple[int, ...] | None:
        pick, size = -1, 0
        for v, dv in enumerate(domains):
            if dv & (dv - 1):
                s = dv.bit_count()
                if pick < 0 or s < size:
                    pick, size = v, s
                    if s == 2:
                        break
        if pick < 0:
            return tuple(d.bit_length() for d in domains)
        for c0 in iter_bits(domains[pick]):
            trial = domains[:]
            trial[pick] = 1 << c0
            if self._propagate(trial, pick) and self._dominators_ok(trial):
                found = self._search(trial)
                if found is not None:
                    return found
        return None


def _has_matching(need: int, domains: list[int]) -> bool:
    """Can distinct entries of ``domains`` supply every color in ``need``?"""
    owner: dict[int, int] = {}

    def augment(c: int, seen: set[int]) -> bool:
        for idx, d in enumerate(domains):
            if d >> c & 1 and idx not in seen:
                seen.add(idx)
                other = owner.get(idx)
                if other is None or augment(other, seen):
                    owner[idx] = c
                    return True
        return False

    for c in iter_bits(need):
        if not augment(c, set()):
            return False
    return True


def find_b_coloring(g: Graph, k: int) -> tuple[int, ...] | None:
    """A b-coloring of ``g`` using exactly ``k`` colors, or None."""
    _require_vertices(g, "b-coloring")
    if k < 1 or k > g.n:
        return None
    degs = g.degrees()
    cand = [v for v in range(g.n) if degs[v] >= k - 1]
    if len(cand) < k:
        return None
    for dom in combinations(cand, k):
        col = _BSearch(g, k, dom).run()
        if col is not None:
            return col
    return None


def b_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Return b(g) and a witness b-coloring with exactly b(g) colors."""
    _require_vertices(g, "b-chromatic number")
    chi = chromatic_number(g)
    for k in range(m_number(g), chi - 1, -1):
        col = find_b_coloring(g, k)
        if col is not None:
            return k, col
    raise AssertionError("every χ-coloring is a b-coloring; search must succeed at k = χ")
