"""Longest induced cycles and k-chordality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph_core import Graph, iter_bits


@dataclass(frozen=True)
class InducedCycle:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ChordalityResult:
    value: int
    witness: InducedCycle | None = None

    def to_dict(self) -> dict:
        out: dict = {"chordality": self.value}
        if self.witness is not None:
            out["witness"] = list(self.witness.vertices)
        return out


def is_induced_cycle(g: Graph, cycle) -> bool:
    """Check that ``cycle`` (a vertex sequence) is a chordless cycle of ``g``."""
    vs = list(cycle.vertices if isinstance(cycle, InducedCycle) else cycle)
    m = len(vs)
    if m < 3 or len(set(vs)) != m or not all(0 <= v < g.n for v in vs):
        return False
    for i in range(m):
        for j in range(i + 1, m):
            consecutive = j == i + 1 or (i == 0 and j == m - 1)
            if g.has_edge(vs[i], vs[j]) != consecutive:
                return False
    return True


def enumerate_induced_cycles(g: Graph, min_len: int = 3) -> Iterator[InducedCycle]:
    """Yield every induced cycle of length >= ``min_len`` once.

    Each cycle starts at its least vertex and runs toward the smaller of that
    vertex's two cycle neighbours.
    """
    if min_len < 3:
        raise ValueError(f"min_len must be >= 3, got {min_len}")
    adj = g.adj
    for s in range(g.n):
        above = g.vertices >> (s + 1) << (s + 1)
        ns = adj[s] & above
        for v1 in iter_bits(ns):
            # neighbours of s below v1 could only close the cycle in reverse direction
            free = above & ~(ns & ((2 << v1) - 1))
            yield from _extend(adj, [s, v1], free, 0, ns, min_len)


def _extend(adj, path, free, blocked, ns, min_len):
    # blocked: neighbours of the path's interior vertices, s excluded
    last = path[-1]
    cand = adj[last] & free & ~blocked
    inner = blocked | adj[last]
    for w in iter_bits(cand):
        if ns >> w & 1:
            # w closes the cycle; it cannot be extended past without a chord
            if len(path) + 1 >= min_len:
                yield InducedCycle(tuple(path) + (w,))
        else:
            path.append(w)
            yield from _extend(adj, path, free & ~(1 << w), inner, ns, min_len)
            path.pop()


def chordality(g: Graph) -> ChordalityResult:
    best = None
    for c in enumerate_induced_cycles(g, 3):
        if best is None or c.length > best.length:
            best = c
    if best is None:
        return ChordalityResult(0)
    return ChordalityResult(best.length, best)


def is_k_chordal(g: Graph, k: int) -> bool:
    if k < 3:
        raise ValueError(f"k-chordality is defined for k >= 3, got {k}")
    return longer_induced_cycle(g, k) is None


def longer_induced_cycle(g: Graph, k: int) -> InducedCycle | None:
    """First induced cycle of length > k, if any."""
    return next(enumerate_induced_cycles(g, max(3, k + 1)), None)
