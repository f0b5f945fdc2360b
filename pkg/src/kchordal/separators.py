"""Minimal vertex separators and the separator path-length test for k-chordality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph_core import Graph, VertexSet, _as_mask, components, iter_bits, members
from .simplicial import InducedPath, _chordless_paths


@dataclass(frozen=True)
class SeparatorRecord:
    s: VertexSet
    pair: tuple[int, int]
    components: tuple[VertexSet, ...]
    full_components: tuple[VertexSet, ...]

    def to_dict(self) -> dict:
        return {
            "separator": members(self.s),
            "pair": list(self.pair),
            "components": [members(c) for c in self.components],
            "full_components": [members(c) for c in self.full_components],
        }


@dataclass(frozen=True)
class SeparatorViolation:
    s: VertexSet
    x: int
    y: int
    path_i: InducedPath
    path_j: InducedPath
    comp_i: VertexSet
    comp_j: VertexSet

    @property
    def total(self) -> int:
        return self.path_i.length + self.path_j.length

    def cycle(self) -> tuple[int, ...]:
        """The induced cycle formed by walking ``path_i`` out and ``path_j`` back."""
        return self.path_i.vertices + tuple(reversed(self.path_j.vertices[1:-1]))

    def to_dict(self) -> dict:
        return {
            "separator": members(self.s),
            "x": self.x,
            "y": self.y,
            "path_i": list(self.path_i.vertices),
            "path_j": list(self.path_j.vertices),
            "comp_i": members(self.comp_i),
            "comp_j": members(self.comp_j),
            "total": self.total,
        }


def _nbhd(adj, c: VertexSet) -> VertexSet:
    nb = 0
    for v in iter_bits(c):
        nb |= adj[v]
    return nb & ~c


def _record(g: Graph, s: VertexSet) -> SeparatorRecord:
    comps = tuple(components(g.adj, g.vertices & ~s))
    full = tuple(c for c in comps if _nbhd(g.adj, c) == s)
    a = full[0] & -full[0]
    b = full[1] & -full[1]
    return SeparatorRecord(s, (a.bit_length() - 1, b.bit_length() - 1), comps, full)


def minimal_separator_sets(g: Graph) -> list[VertexSet]:
    """All non-empty minimal separators, in discovery order.

    Seeds with N(C) for the components C of G - N[v], then closes under
    S -> N(C) for the components C of G - (S u N(x)), x in S.
    """
    adj = g.adj
    full = g.vertices
    seen: set[int] = set()
    found: list[int] = []

    def harvest(removed: VertexSet) -> None:
        for c in components(adj, full & ~removed):
            s = _nbhd(adj, c)
            if s and s not in seen:
                seen.add(s)
                found.append(s)

    for v in range(g.n):
        harvest(adj[v] | (1 << v))
    i = 0
    while i < len(found):
        s = found[i]
        for x in iter_bits(s):
            harvest(s | adj[x])
        i += 1
    return found


def enumerate_minimal_separators(g: Graph) -> Iterator[SeparatorRecord]:
    for s in minimal_separator_sets(g):
        yield _record(g, s)


def _longest_path(adj, x: int, y: int, comp: VertexSet) -> tuple[int, ...] | None:
    if adj[x] >> y & 1:
        return None
    best = None
    for p in _chordless_paths(adj, x, y, comp, 2):
        if best is None or len(p) > len(best):
            best = p
    return best


def longest_induced_xy_path_in_component(g: Graph, x: int, y: int,
                                         comp: VertexSet | Iterable[int]) -> InducedPath | None:
    """Longest chordless x-y path with at least one interior vertex, all in ``comp``."""
    if x == y:
        raise ValueError("endpoints must differ")
    comp = _as_mask(comp)
    if comp >> x & 1 or comp >> y & 1:
        raise ValueError("endpoints must lie outside the component")
    p = _longest_path(g.adj, x, y, comp)
    return None if p is None else InducedPath(p)


def check_separator_condition(g: Graph, rec: SeparatorRecord, k: int) -> SeparatorViolation | None:
    """Find non-adjacent x, y in the separator whose longest routes through two
    different components of G - S sum to more than ``k``.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    adj = g.adj
    s = rec.s
    for x in iter_bits(s):
        for y in iter_bits(s & ~adj[x] >> (x + 1) << (x + 1)):
            routes = []
            for c in rec.components:
                if adj[x] & c and adj[y] & c:
                    p = _longest_path(adj, x, y, c)
                    if p is not None:
                        routes.append((p, c))
            if len(routes) < 2:
                continue
            # stable: ties keep component order
            routes.sort(key=lambda r: -len(r[0]))
            (pi, ci), (pj, cj) = routes[0], routes[1]
            if len(pi) + len(pj) - 2 > k:
                return SeparatorViolation(s, x, y, InducedPath(pi), InducedPath(pj), ci, cj)
    return None


def is_k_chordal_via_separators(g: Graph, k: int) -> tuple[bool, SeparatorViolation | None]:
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    for rec in enumerate_minimal_separators(g):
        violation = check_separator_condition(g, rec, k)
        if violation is not None:
            return False, violation
    return True, None
