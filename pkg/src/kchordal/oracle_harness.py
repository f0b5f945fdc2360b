"""Graph corpora and the three-way k-chordality equivalence check.

For every graph and ``k`` the harness computes

* (i)   chordality <= k, by induced-cycle search;
* (ii)  a k-simplicial elimination ordering exists, by greedy elimination;
* (iii) every minimal separator passes the two-route path-length bound;

and reports any graph on which they disagree.  It also hosts two small
classical oracles used to cross-check the main routes at k = 3.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np

from .chordality import longer_induced_cycle
from .graph_core import Graph, components, encode_graph6, iter_bits, members
from .separators import is_k_chordal_via_separators
from .simplicial import OrderingCertificate, _c1, _c2, k_simplicial_ordering

MAX_ENUMERATION_N = 7


def dumps(obj) -> str:
    """Canonical single-line JSON used for every machine-readable output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- corpora


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    """Labeled graph whose t-th lexicographic vertex pair is an edge iff bit t of ``mask`` is set."""
    adj = [0] * n
    for t, (u, v) in enumerate(_pairs(n)):
        if mask >> t & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on ``n`` vertices, in edge-mask order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"labeled enumeration is capped at n={MAX_ENUMERATION_N} "
                         f"(n={n} would be 2^{n * (n - 1) // 2} graphs)")
    pairs = _pairs(n)
    bits = [(1 << u, 1 << v, u, v) for u, v in pairs]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        t = 0
        m = mask
        while m:
            if m & 1:
                bu, bv, u, v = bits[t]
                adj[u] |= bv
                adj[v] |= bu
            m >>= 1
            t += 1
        yield Graph(n, tuple(adj))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from NumPy's PCG64 bit generator.

    One ``Generator.random()`` double is drawn per vertex pair in lexicographic
    order; the pair is an edge iff the draw is below ``p``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = np.random.Generator(np.random.PCG64(seed))
    pairs = _pairs(n)
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, [e for e, x in zip(pairs, draws) if x < p])


def random_graphs(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """``count`` independent samples; sample i uses seed ``seed + i``."""
    for i in range(count):
        yield random_graph(n, p, seed + i)


# ---------------------------------------------------------------- equivalence


@dataclass(frozen=True)
class EquivalenceReport:
    graph: Graph
    k: int
    verdict_i: bool
    verdict_ii: bool
    verdict_iii: bool
    disagreement_witness: dict | None = None

    @property
    def agree(self) -> bool:
        return self.verdict_i == self.verdict_ii == self.verdict_iii

    def to_dict(self) -> dict:
        return {
            "graph6": encode_graph6(self.graph),
            "k": self.k,
            "i": self.verdict_i,
            "ii": self.verdict_ii,
            "iii": self.verdict_iii,
            "agree": self.agree,
            "witness": self.disagreement_witness,
        }


def check_theorem1(g: Graph, k: int) -> EquivalenceReport:
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    cycle = longer_induced_cycle(g, k)
    ordering = k_simplicial_ordering(g, k)
    sep_ok, violation = is_k_chordal_via_separators(g, k)
    v1 = cycle is None
    v2 = isinstance(ordering, OrderingCertificate)
    witness = None
    if not v1 == v2 == sep_ok:
        witness = {
            "induced_cycle": None if cycle is None else list(cycle.vertices),
            "ordering": ordering.to_dict(),
            "separator_violation": None if violation is None else violation.to_dict(),
        }
    return EquivalenceReport(g, k, v1, v2, sep_ok, witness)


def _check_all(args: tuple[Graph, tuple[int, ...]]) -> list[EquivalenceReport]:
    g, ks = args
    return [check_theorem1(g, k) for k in ks]


@dataclass
class SweepSummary:
    ks: tuple[int, ...]
    graphs: int = 0
    checks: int = 0
    k_chordal: dict[int, int] = field(default_factory=dict)
    failures: list[EquivalenceReport] = field(default_factory=list)

    @property
    def disagreements(self) -> int:
        return len(self.failures)

    def to_dict(self) -> dict:
        return {
            "ks": list(self.ks),
            "graphs": self.graphs,
            "checks": self.checks,
            "k_chordal": {str(k): self.k_chordal.get(k, 0) for k in self.ks},
            "disagreements": self.disagreements,
        }

    def table(self) -> str:
        lines = [f"graphs={self.graphs} checks={self.checks} disagreements={self.disagreements}",
                 f"{'k':>4} {'k-chordal':>10} {'not':>8}"]
        for k in self.ks:
            yes = self.k_chordal.get(k, 0)
            lines.append(f"{k:>4} {yes:>10} {self.graphs - yes:>8}")
        return "\n".join(lines)


def sweep(corpus: Iterable[Graph], ks: Sequence[int], workers: int = 1,
          chunksize: int = 256) -> SweepSummary:
    """Run :func:`check_theorem1` on every (graph, k); failures are kept, never raised.

    With ``workers > 1`` graphs are spread over a process pool; results are
    merged in input order so the summary does not depend on scheduling.
    """
    ks = tuple(ks)
    summary = SweepSummary(ks)
    jobs = ((g, ks) for g in corpus)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            _merge(summary, pool.map(_check_all, jobs, chunksize=chunksize))
    else:
        _merge(summary, map(_check_all, jobs))
    return summary


def _merge(summary: SweepSummary, results: Iterable[list[EquivalenceReport]]) -> None:
    for reports in results:
        summary.graphs += 1
        for r in reports:
            summary.checks += 1
            if r.verdict_i:
                summary.k_chordal[r.k] = summary.k_chordal.get(r.k, 0) + 1
            if not r.agree:
                summary.failures.append(r)


# ---------------------------------------------------------------- C1 / C2 independence


class Direction(str, Enum):
    C1_NOT_C2 = "C1_NOT_C2"
    C2_NOT_C1 = "C2_NOT_C1"


@dataclass(frozen=True)
class IndependenceWitness:
    direction: Direction
    graph: Graph
    vertex: int
    k: int

    def to_dict(self) -> dict:
        return {
            "direction": self.direction.value,
            "graph6": encode_graph6(self.graph),
            "edges": [list(e) for e in self.graph.edges()],
            "vertex": self.vertex,
            "k": self.k,
        }


def find_independence_witnesses(max_n: int, ks: Sequence[int]
                                ) -> tuple[IndependenceWitness | None, IndependenceWitness | None]:
    """First (graph, vertex, k) with C1 but not C2, and first with C2 but not C1.

    Graphs are scanned by order, then edge mask, then vertex, then ``ks``.
    A direction that does not occur up to ``max_n`` comes back as ``None``.
    """
    if any(k < 3 for k in ks):
        raise ValueError("every k must be >= 3")
    found: dict[Direction, IndependenceWitness] = {}
    for n in range(min(max_n, MAX_ENUMERATION_N) + 1):
        for g in enumerate_labeled_graphs(n):
            for v in range(n):
                for k in ks:
                    c1 = _c1(g.adj, v, k, g.vertices)
                    c2 = _c2(g.adj, v, k, g.vertices) is None
                    if c1 != c2:
                        d = Direction.C1_NOT_C2 if c1 else Direction.C2_NOT_C1
                        found.setdefault(d, IndependenceWitness(d, g, v, k))
                        if len(found) == 2:
                            return found[Direction.C1_NOT_C2], found[Direction.C2_NOT_C1]
    return found.get(Direction.C1_NOT_C2), found.get(Direction.C2_NOT_C1)


# ---------------------------------------------------------------- classical oracles


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Tarjan-Yannakakis MCS; the reverse of the visit order is a PEO iff g is chordal."""
    weight = [0] * g.n
    unvisited = set(range(g.n))
    visit = []
    while unvisited:
        v = max(sorted(unvisited), key=lambda u: weight[u])
        unvisited.remove(v)
        visit.append(v)
        for u in g.neighbours(v):
            if u in unvisited:
                weight[u] += 1
    return visit[::-1]


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbours(v) if position[u] > position[v]]
        for a, b in itertools.combinations(later, 2):
            if not g.has_edge(a, b):
                return False
    return True


def is_chordal_classical(g: Graph) -> bool:
    return is_perfect_elimination_ordering(g, maximum_cardinality_search(g))


def brute_force_minimal_separators(g: Graph) -> set[frozenset[int]]:
    """Every S that separates some same-component pair (a, b) while no S - {s} does."""
    full = g.vertices
    label_cache: dict[int, dict[int, int]] = {}

    def labels(removed: int) -> dict[int, int]:
        if removed not in label_cache:
            label_cache[removed] = {v: i for i, c in enumerate(components(g.adj, full & ~removed))
                                    for v in iter_bits(c)}
        return label_cache[removed]

    base = labels(0)
    out = set()
    for s in range(1, 1 << g.n):
        cut = labels(s)
        for a, b in itertools.combinations(range(g.n), 2):
            if s >> a & 1 or s >> b & 1 or base[a] != base[b] or cut[a] == cut[b]:
                continue
            if all(labels(s & ~(1 << x))[a] == labels(s & ~(1 << x))[b] for x in iter_bits(s)):
                out.add(frozenset(members(s)))
                break
    return out
