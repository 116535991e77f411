"""Induced-subgraph embeddings and Forb(H) membership."""
from __future__ import annotations

from typing import Iterable

from .graph import Graph


def find_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Return an induced embedding of ``pattern`` into ``host`` or ``None``.

    The result maps pattern vertex ``i`` to ``result[i]``. Pattern vertices
    are placed in index order and host candidates are tried in ascending
    order, so the first hit is the lexicographically least embedding.
    """
    k, n = pattern.n, host.n
    if k == 0:
        return ()
    if k > n:
        return None
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    # earlier pattern vertices adjacent / non-adjacent to each pattern vertex
    back_adj = [pattern.adj[i] & ((1 << i) - 1) for i in range(k)]
    # number of not-yet-placed pattern neighbours, for a cheap look-ahead
    fwd_deg = [(pattern.adj[i] >> (i + 1)).bit_count() for i in range(k)]
    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        want = back_adj[i]
        for h in range(n):
            if used >> h & 1 or hdeg[h] < pdeg[i]:
                continue
            row = host.adj[h]
            ok = True
            for j in range(i):
                if (want >> j & 1) != (row >> image[j] & 1):
                    ok = False
                    break
            if not ok:
                continue
            if (row & ~used).bit_count() < fwd_deg[i]:
                continue
            image[i] = h
            if extend(i + 1, used | 1 << h):
                return True
        return False

    if extend(0, 0):
        return tuple(image)
    return None


def is_induced_embedding(host: Graph, pattern: Graph, image: tuple[int, ...]) -> bool:
    if len(image) != pattern.n or len(set(image)) != len(image):
        return False
    if any(not 0 <= h < host.n for h in image):
        return False
    return all(
        pattern.has_edge(i, j) == host.has_edge(image[i], image[j])
        for i in range(pattern.n) for j in range(i + 1, pattern.n)
    )


def is_free(host: Graph, patterns: Iterable[Graph]) -> bool:
    """True iff ``host`` contains none of ``patterns`` as an induced subgraph."""
    return all(find_induced(host, p) is None for p in patterns)

