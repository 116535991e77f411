"""Constructors for the graph families used throughout the package.

Numbering conventions are fixed so witnesses are reproducible:

* ``gen_B(t)``: side A is ``0..t-1``, side B is ``t..2t-1``; ``a_i``--``b_i``
  is removed for ``i < t-1``, so ``a_{t-1}`` and ``b_{t-1}`` (vertices
  ``t-1`` and ``2t-1``) keep full degree ``t``.
* ``gen_R(k)``: root ``0``, children ``1..k-1``, then the leaves of child 1,
  child 2, ... in order.
* ``gen_caterpillar(s, l)``: spine ``0..s-1``, then the leaves of each spine
  vertex grouped in spine order.
"""
from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass, field

from .graph import Graph, GraphError, build_graph

RNG_NAME = "python-random-mt19937"


def gen_path(k: int) -> Graph:
    if k < 1:
        raise GraphError(f"path needs k >= 1, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def gen_cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs k >= 3, got {k}")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def gen_complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError(f"complete bipartite graph needs s, t >= 1, got ({s}, {t})")
    return build_graph(s + t, [(u, s + v) for u in range(s) for v in range(t)])


def gen_empty(n: int) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    return build_graph(n, [])


def gen_B(t: int) -> Graph:
    """K_{t,t} with the matching a_i--b_i (i = 0..t-2) deleted."""
    if t < 2:
        raise GraphError(f"B_t needs t >= 2, got {t}")
    edges = [(i, t + j) for i in range(t) for j in range(t) if i != j or i == t - 1]
    return build_graph(2 * t, edges)


def gen_R(k: int) -> Graph:
    if k < 2:
        raise GraphError(f"R_k needs k >= 2, got {k}")
    edges = [(0, i) for i in range(1, k)]
    nxt = k
    for i in range(1, k):
        for _ in range(k - 2):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def r_coloring(k: int) -> tuple[int, ...]:
    """The k-color b-coloring of ``gen_R(k)`` in which child i dominates color i.

    Child ``v_i`` gets color ``i``; the root takes color ``k``; the leaves of
    ``v_i`` take the ``k-2`` colors outside ``{i, k}``.
    """
    if k < 2:
        raise GraphError(f"R_k needs k >= 2, got {k}")
    colors = [k] + list(range(1, k))
    for i in range(1, k):
        colors.extend(c for c in range(1, k) if c != i)
    return tuple(colors)


def gen_caterpillar(s: int, l: int) -> Graph:
    if s < 1 or l < 0:
        raise GraphError(f"caterpillar needs s >= 1 and l >= 0, got ({s}, {l})")
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i in range(s):
        for _ in range(l):
            edges.append((i, nxt))
            nxt += 1
    return build_graph(nxt, edges)


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``n`` vertices with Prüfer sequence ``seq``."""
    if len(seq) != max(n - 2, 0):
        raise GraphError(f"Prüfer sequence for n={n} must have length {max(n - 2, 0)}")
    if n == 1:
        return []
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def gen_random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise GraphError(f"random tree needs n >= 1, got {n}")
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_graph(n, prufer_decode(seq, n))


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# textual family specs -------------------------------------------------------

KINDS = ("path", "complete", "complete_bipartite", "B", "R", "caterpillar", "random_tree")

_ALIASES = {
    "path": "path", "P": "path",
    "K": "complete", "complete": "complete",
    "Kst": "complete_bipartite", "complete_bipartite": "complete_bipartite",
    "B": "B", "R": "R",
    "cat": "caterpillar", "caterpillar": "caterpillar",
    "tree": "random_tree", "random_tree": "random_tree",
}

_SHORT = {
    "path": "path", "complete": "K", "complete_bipartite": "Kst", "B": "B",
    "R": "R", "caterpillar": "cat", "random_tree": "tree",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = field(default=())
    seed: int | None = None

    @property
    def short(self) -> str:
        return _SHORT[self.kind]

    def param_label(self) -> str:
        sep = "x" if self.kind == "caterpillar" else ","
        return sep.join(str(p) for p in self.params)

    def __str__(self) -> str:
        text = self.short
        if self.params:
            text += ":" + self.param_label()
        if self.seed is not None:
            text += f":seed={self.seed}"
        return text

    def build(self) -> Graph:
        p = self.params
        arity = {"caterpillar": 2, "complete_bipartite": 2}.get(self.kind, 1)
        if len(p) != arity:
            raise GraphError(f"family {self.short!r} takes {arity} parameter(s), got {len(p)}")
        if self.kind == "path":
            return gen_path(*p)
        if self.kind == "complete":
            return gen_complete(*p)
        if self.kind == "complete_bipartite":
            return gen_complete_bipartite(*p)
        if self.kind == "B":
            return gen_B(*p)
        if self.kind == "R":
            return gen_R(*p)
        if self.kind == "caterpillar":
            return gen_caterpillar(*p)
        return gen_random_tree(p[0], 0 if self.seed is None else self.seed)


def parse_family(text: str) -> FamilySpec:
    """Parse ``"B:4"``, ``"cat:10x3"``, ``"tree:8:seed=42"``, ``"Kst:3,3"`` and friends.

    The parameter part may be omitted (``"B"``) for use with sweeps.
    """
    parts = text.strip().split(":")
    kind = _ALIASES.get(parts[0])
    if kind is None:
        raise GraphError(f"unknown family {parts[0]!r}")
    params: tuple[int, ...] = ()
    seed = None
    for part in parts[1:]:
        if part.startswith("seed="):
            try:
                seed = int(part[5:])
            except ValueError:
                raise GraphError(f"bad seed in family spec {text!r}") from None
            continue
        if params:
            raise GraphError(f"too many parameter groups in family spec {text!r}")
        try:
            params = tuple(int(x) for x in re.split(r"[x,]", part))
        except ValueError:
            raise GraphError(f"bad parameters in family spec {text!r}") from None
    return FamilySpec(kind, params, seed)
