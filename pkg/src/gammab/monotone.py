"""b-monotonicity: does some induced subgraph have a larger b-chromatic number?

Two violations are reported when a graph is not b-monotone:

* ``witness``: the first level at which monotonicity breaks, i.e. the least
  b(H) exceeding b(G); among those the largest set, ties lexicographic.
* ``strongest``: the largest b(H) found; among those the largest set,
  ties lexicographic.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .bcolor import b_number, m_number
from .graph import Graph, GraphError, induced_mask, induced_subgraph, iter_bits, mask_of

EXACT_MAX_N = 14


@dataclass(frozen=True)
class Violation:
    vertices: tuple[int, ...]
    b: int
    coloring: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "b": self.b, "coloring": list(self.coloring)}


@dataclass(frozen=True)
class MonotonicityVerdict:
    monotone: bool
    b: int
    witness: Violation | None = None
    strongest: Violation | None = None
    method: str = "exact"
    checked: int = 0

    def to_dict(self) -> dict:
        return {
            "monotone": self.monotone,
            "b": self.b,
            "witness": self.witness and self.witness.to_dict(),
            "strongest": self.strongest and self.strongest.to_dict(),
            "method": self.method,
            "checked": self.checked,
        }


class _Collector:
    def __init__(self, g: Graph, bg: int):
        self.g = g
        self.bg = bg
        self.first: tuple | None = None
        self.top: tuple | None = None

    def offer(self, mask: int) -> None:
        h = induced_mask(self.g, mask)
        # b(H) <= m(H), so most subsets are settled without a b computation
        if m_number(h) <= self.bg:
            return
        bh, col = b_number(h)
        if bh <= self.bg:
            return
        subset = tuple(iter_bits(mask))
        v = Violation(subset, bh, col)
        first_key = (bh, -len(subset), subset)
        top_key = (-bh, -len(subset), subset)
        if self.first is None or first_key < self.first[0]:
            self.first = (first_key, v)
        if self.top is None or top_key < self.top[0]:
            self.top = (top_key, v)

    def verdict(self, method: str, checked: int) -> MonotonicityVerdict:
        if self.first is None:
            return MonotonicityVerdict(True, self.bg, method=method, checked=checked)
        witness, strongest = self.first[1], self.top[1]
        for v in (witness, strongest):
            # independent re-verification on a freshly induced graph
            if b_number(induced_subgraph(self.g, v.vertices))[0] != v.b:
                raise AssertionError(f"witness {v.vertices} failed re-verification")
        return MonotonicityVerdict(False, self.bg, witness, strongest, method, checked)


def is_b_monotone(g: Graph, cap: int = EXACT_MAX_N) -> MonotonicityVerdict:
    """Exhaustive check over every nonempty proper induced subgraph."""
    if g.n == 0:
        raise GraphError("b-monotonicity is undefined for the empty graph")
    if g.n > cap:
        raise GraphError(
            f"exact b-monotonicity enumerates 2^n subsets; n={g.n} exceeds the cap {cap}. "
            "Use sample_b_monotone (CLI: monotone --sample TRIALS SEED) instead."
        )
    col = _Collector(g, b_number(g)[0])
    checked = 0
    for size in range(g.n - 1, 0, -1):
        for subset in combinations(range(g.n), size):
            checked += 1
            col.offer(mask_of(subset))
    return col.verdict("exact", checked)


def sample_b_monotone(g: Graph, trials: int, seed: int) -> MonotonicityVerdict:
    """Randomised falsifier over ``trials`` uniform vertex subsets.

    ``monotone=True`` only means no violation was found.
    """
    if trials < 1:
        raise GraphError(f"trials must be >= 1, got {trials}")
    if g.n == 0:
        raise GraphError("b-monotonicity is undefined for the empty graph")
    col = _Collector(g, b_number(g)[0])
    rng = random.Random(seed)
    full = g.vertex_mask
    seen: set[int] = set()
    for _ in range(trials):
        mask = rng.getrandbits(g.n)
        if mask == 0 or mask == full or mask in seen:
            continue
        seen.add(mask)
        col.offer(mask)
    return col.verdict("sample", len(seen))
