"""k-simplicial vertices, the constructive existence argument, and k-simplicial orderings.

A vertex ``v`` is k-simplicial when

* (C1) every two neighbours of ``v`` are within distance ``k - 2`` in ``G - v``;
* (C2) for every non-adjacent pair of neighbours ``x, y``, no chordless
  ``x``-``y`` path whose interior avoids the closed neighbourhood of ``v``
  has more than ``k - 2`` edges.

Internal helpers take a ``within`` bitset so the ordering can work on residual
graphs without relabelling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .graph_core import (
    Graph,
    VertexSet,
    _as_mask,
    induced_subgraph,
    iter_bits,
    members,
    reach,
)


class DominatingSeedError(ValueError):
    """The seed vertex is adjacent to every other vertex."""


class CompleteGraphError(ValueError):
    """Operation needs a non-complete graph."""


class HypothesisViolated(RuntimeError):
    """A constructed vertex failed re-verification; the input was not k-chordal."""

    def __init__(self, verdict: "SimplicialVerdict"):
        super().__init__(f"vertex {verdict.vertex} is not {verdict.k}-simplicial "
                         f"(c1={verdict.c1}, c2={verdict.c2})")
        self.verdict = verdict


@dataclass(frozen=True)
class InducedPath:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def is_induced_path(g: Graph, path) -> bool:
    vs = list(path.vertices if isinstance(path, InducedPath) else path)
    m = len(vs)
    if m < 2 or len(set(vs)) != m or not all(0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[j]) == (j == i + 1) for i in range(m) for j in range(i + 1, m))


@dataclass(frozen=True)
class SimplicialVerdict:
    vertex: int
    k: int
    c1: bool
    c2: bool
    c2_witness: InducedPath | None = None

    @property
    def simplicial(self) -> bool:
        return self.c1 and self.c2

    def __bool__(self) -> bool:
        return self.simplicial

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "c1": self.c1,
            "c2": self.c2,
            "witness": None if self.c2_witness is None else list(self.c2_witness.vertices),
        }


@dataclass(frozen=True)
class OrderingCertificate:
    order: tuple[int, ...]
    k: int
    step_verdicts: tuple[SimplicialVerdict, ...]

    def to_dict(self) -> dict:
        return {
            "order": list(self.order),
            "k": self.k,
            "steps": [v.to_dict() for v in self.step_verdicts],
        }


@dataclass(frozen=True)
class FailureWitness:
    """Greedy elimination got stuck: no vertex of ``residual`` is k-simplicial in it."""

    k: int
    prefix: tuple[int, ...]
    residual: VertexSet
    verdicts: tuple[SimplicialVerdict, ...] = field(default=())

    @property
    def step(self) -> int:
        return len(self.prefix)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "prefix": list(self.prefix),
            "step": self.step,
            "residual": members(self.residual),
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def _check_k(k: int) -> None:
    if k < 3:
        raise ValueError(f"k-simplicial is defined for k >= 3, got {k}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


# ---------------------------------------------------------------- chordless paths


def _chordless_paths(adj: Sequence[int], x: int, y: int, allowed: VertexSet,
                     min_len: int) -> Iterator[tuple[int, ...]]:
    """DFS over chordless x-y paths whose interior lies in ``allowed``."""
    if adj[x] >> y & 1:
        if min_len <= 1:
            yield (x, y)
        return
    ybit = 1 << y
    ny = adj[y]
    allowed &= ~(1 << x) & ~ybit
    path = [x]

    def extend(free: VertexSet, blocked: VertexSet) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        cand = adj[last] & free & ~blocked
        inner = blocked | adj[last]
        for w in iter_bits(cand):
            if ny >> w & 1:
                # next to y: the path must end right here
                if len(path) + 1 >= min_len:
                    yield tuple(path) + (w, y)
            else:
                path.append(w)
                yield from extend(free & ~(1 << w), inner)
                path.pop()

    # y itself is reachable only through a neighbour of y
    yield from extend(allowed, 0)


def enumerate_chordless_paths(g: Graph, x: int, y: int,
                              forbidden_internal: VertexSet | Iterable[int] = 0,
                              min_len: int = 1) -> Iterator[InducedPath]:
    """Every chordless x-y path with no interior vertex in ``forbidden_internal``."""
    if x == y:
        raise ValueError("endpoints must differ")
    allowed = g.vertices & ~_as_mask(forbidden_internal)
    for p in _chordless_paths(g.adj, x, y, allowed, min_len):
        yield InducedPath(p)


# ---------------------------------------------------------------- C1 / C2


def _c1(adj: Sequence[int], v: int, k: int, within: VertexSet) -> bool:
    nv = adj[v] & within
    rest = within & ~(1 << v)
    todo = nv
    while todo:
        x = todo & -todo
        todo ^= x
        if nv & ~reach(adj, x, rest, k - 2):
            return False
    return True


def _c2(adj: Sequence[int], v: int, k: int, within: VertexSet) -> InducedPath | None:
    nv = adj[v] & within
    allowed = within & ~nv & ~(1 << v)
    for x in iter_bits(nv):
        for y in iter_bits(nv & ~adj[x] >> (x + 1) << (x + 1)):
            for p in _chordless_paths(adj, x, y, allowed, k - 1):
                return InducedPath(p)
    return None


def _verdict(adj: Sequence[int], v: int, k: int, within: VertexSet) -> SimplicialVerdict:
    witness = _c2(adj, v, k, within)
    return SimplicialVerdict(v, k, _c1(adj, v, k, within), witness is None, witness)


def _is_simplicial(adj: Sequence[int], v: int, k: int, within: VertexSet) -> bool:
    return _c1(adj, v, k, within) and _c2(adj, v, k, within) is None


def check_c1(g: Graph, v: int, k: int) -> bool:
    """Neighbours of ``v`` pairwise within distance k-2 in G - v."""
    _check_vertex(g, v)
    _check_k(k)
    return _c1(g.adj, v, k, g.vertices)


def check_c2(g: Graph, v: int, k: int) -> tuple[bool, InducedPath | None]:
    """Returns ``(holds, witness)``; the witness is the first offending path found."""
    _check_vertex(g, v)
    _check_k(k)
    witness = _c2(g.adj, v, k, g.vertices)
    return witness is None, witness


def is_k_simplicial(g: Graph, v: int, k: int) -> SimplicialVerdict:
    _check_vertex(g, v)
    _check_k(k)
    return _verdict(g.adj, v, k, g.vertices)


def k_simplicial_vertices(g: Graph, k: int) -> list[int]:
    _check_k(k)
    return [v for v in range(g.n) if _is_simplicial(g.adj, v, k, g.vertices)]


# ---------------------------------------------------------------- constructive route


def max_connected_nondominating_set(g: Graph, seed: int) -> VertexSet:
    """Grow a connected non-dominating set from ``seed`` until it is maximal.

    Repeatedly adds the lowest vertex of N(A) that keeps N[A] a proper subset
    of V.  On return every vertex outside N[A] is adjacent to all of N(A).
    """
    _check_vertex(g, seed)
    full = g.vertices
    a = 1 << seed
    closed = a | g.adj[seed]
    if closed == full:
        raise DominatingSeedError(f"vertex {seed} dominates the graph")
    grown = True
    while grown:
        grown = False
        for u in iter_bits(closed & ~a):
            if closed | g.adj[u] != full:
                a |= 1 << u
                closed |= g.adj[u]
                grown = True
                break
    return a


def _first_non_dominating(g: Graph) -> int:
    full = g.vertices
    return next(v for v in range(g.n) if g.adj[v] | (1 << v) != full)


def _simplicial_outside(g: Graph, a: VertexSet, k: int) -> int:
    """A vertex of V - N[A] that the induction makes k-simplicial in ``g``."""
    closed = a
    for v in iter_bits(a):
        closed |= g.adj[v]
    h, labels = induced_subgraph(g, g.vertices & ~closed)
    return labels[_constructive(h, k)]


def _constructive(g: Graph, k: int) -> int:
    if g.is_complete():
        return 0
    a = max_connected_nondominating_set(g, _first_non_dominating(g))
    return _simplicial_outside(g, a, k)


def find_k_simplicial_constructive(g: Graph, k: int) -> int:
    """Locate a k-simplicial vertex by recursing into V - N[A] for a maximal
    connected non-dominating set A.

    Raises :class:`HypothesisViolated` if the vertex found does not verify,
    which can only happen when ``g`` is not k-chordal.
    """
    _check_k(k)
    if g.n == 0:
        raise ValueError("empty graph has no vertices")
    v = _constructive(g, k)
    verdict = _verdict(g.adj, v, k, g.vertices)
    if not verdict:
        raise HypothesisViolated(verdict)
    return v


def find_two_nonadjacent_k_simplicial(g: Graph, k: int) -> tuple[int, int]:
    """Two non-adjacent k-simplicial vertices of a non-complete k-chordal graph.

    The first comes from V - N[A]; the second from V - N[A'] where A' is grown
    from the first.  Returned in increasing order.
    """
    _check_k(k)
    if g.is_complete():
        raise CompleteGraphError("a complete graph has no non-adjacent pair")
    a = max_connected_nondominating_set(g, _first_non_dominating(g))
    u = _simplicial_outside(g, a, k)
    a2 = max_connected_nondominating_set(g, u)
    v = _simplicial_outside(g, a2, k)
    for w in (u, v):
        verdict = _verdict(g.adj, w, k, g.vertices)
        if not verdict:
            raise HypothesisViolated(verdict)
    assert not g.has_edge(u, v)
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------- orderings


def k_simplicial_ordering(g: Graph, k: int) -> OrderingCertificate | FailureWitness:
    """Greedy elimination, always taking the lowest k-simplicial vertex of the residual graph."""
    _check_k(k)
    adj = g.adj
    residual = g.vertices
    order: list[int] = []
    steps: list[SimplicialVerdict] = []
    while residual:
        for v in iter_bits(residual):
            verdict = _verdict(adj, v, k, residual)
            if verdict:
                break
        else:
            stuck = tuple(_verdict(adj, v, k, residual) for v in iter_bits(residual))
            return FailureWitness(k, tuple(order), residual, stuck)
        order.append(v)
        steps.append(verdict)
        residual &= ~(1 << v)
    return OrderingCertificate(tuple(order), k, tuple(steps))


def verify_ordering(g: Graph, order: Sequence[int], k: int) -> tuple[bool, int | None]:
    """``(True, None)`` or ``(False, first failing position)``."""
    _check_k(k)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    residual = g.vertices
    for i, v in enumerate(order):
        if not _is_simplicial(g.adj, v, k, residual):
            return False, i
        residual &= ~(1 << v)
    return True, None
