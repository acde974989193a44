"""Edge orientations, exit sets and Poincare-Hopf indices.

An orientation assigns a direction to every edge. Index theory is only
defined for irrotational orientations (no triangle carries a directed
3-cycle); those induce a strict total order on every complete subgraph,
which is what makes the index sum collapse to the Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    DEFAULT_BUDGET,
    Graph,
    Polynomial,
    _bits,
    chi_of_mask,
    clique_size_counts,
    f_function,
    f_vector,
    graph_chi,
)


class NotIrrotationalError(ValueError):
    """The orientation has a cyclic triangle, so indices are undefined."""


@dataclass(frozen=True)
class Coloring:
    """Per-vertex scalar values; ties are broken by vertex id.

    The induced order is always strict and total: vertex u precedes v
    when (values[u], u) < (values[v], v).
    """

    values: tuple[float, ...]

    @classmethod
    def from_sequence(cls, values: Iterable[float]) -> "Coloring":
        return cls(tuple(float(x) for x in values))

    @classmethod
    def identity(cls, n: int) -> "Coloring":
        return cls(tuple(float(v) for v in range(n)))

    def key(self, v: int):
        return (self.values[v], v)

    def precedes(self, u: int, v: int) -> bool:
        return self.key(u) < self.key(v)

    def __len__(self) -> int:
        return len(self.values)


class Orientation:
    """A direction for every edge of a graph, held as in/out bitmasks."""

    __slots__ = ("graph", "_in", "_out", "_irrotational")

    def __init__(self, graph: Graph, in_masks: Sequence[int], out_masks: Sequence[int]):
        self.graph = graph
        self._in = tuple(in_masks)
        self._out = tuple(out_masks)
        self._irrotational: bool | None = None

    @classmethod
    def from_directed_edges(
        cls, g: Graph, directed: Iterable[tuple[int, int]]
    ) -> "Orientation":
        """Build from (tail, head) pairs covering each edge exactly once."""
        in_masks = [0] * g.n
        out_masks = [0] * g.n
        seen = set()
        for u, v in directed:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise ValueError(f"({u},{v}) is not an edge of the graph")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {key} assigned a direction twice")
            seen.add(key)
            out_masks[u] |= 1 << v
            in_masks[v] |= 1 << u
        if len(seen) != g.edge_count:
            raise ValueError("orientation must cover every edge of the graph")
        return cls(g, in_masks, out_masks)

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def points_to(self, u: int, v: int) -> bool:
        """True when the edge {u, v} is directed u -> v."""
        if not self.graph.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        return (self._out[u] >> v) & 1 == 1

    def directed_edges(self) -> list[tuple[int, int]]:
        out = []
        for u, v in self.graph.edges():
            out.append((u, v) if self.points_to(u, v) else (v, u))
        return out

    @property
    def is_irrotational(self) -> bool:
        if self._irrotational is None:
            self._irrotational = find_cyclic_triangle(self.graph, self) is None
        return self._irrotational


def orient_by_coloring(g: Graph, c: Coloring) -> Orientation:
    """Direct each edge toward the larger coloring value (ids break ties).

    Gradient orientations are irrotational by construction; the check is
    still run so a tie-breaking bug could never slip through.
    """
    if len(c) != g.n:
        raise ValueError("coloring length does not match vertex count")
    in_masks = [0] * g.n
    out_masks = [0] * g.n
    for u, v in g.edges():
        if c.precedes(u, v):
            out_masks[u] |= 1 << v
            in_masks[v] |= 1 << u
        else:
            out_masks[v] |= 1 << u
            in_masks[u] |= 1 << v
    o = Orientation(g, in_masks, out_masks)
    if not o.is_irrotational:
        raise RuntimeError("coloring produced a cyclic triangle; tie-break is broken")
    return o


def find_cyclic_triangle(g: Graph, o: Orientation) -> tuple[int, int, int] | None:
    """Lexicographically smallest triangle carrying a directed 3-cycle.

    Triangles are scanned in lexicographic order of their sorted vertex
    triple, so the first hit is the smallest witness; returns None when
    the orientation is irrotational.
    """
    for a in range(g.n):
        above_a = g.neighbor_mask(a) >> (a + 1)
        for boff in _bits(above_a):
            b = a + 1 + boff
            common = g.neighbor_mask(a) & g.neighbor_mask(b)
            for c in _bits(common >> (b + 1)):
                c += b + 1
                ab = o.points_to(a, b)
                bc = o.points_to(b, c)
                ca = o.points_to(c, a)
                if ab == bc and ab == ca:
                    return (a, b, c)
    return None


def _require_irrotational(o: Orientation) -> None:
    if not o.is_irrotational:
        witness = find_cyclic_triangle(o.graph, o)
        raise NotIrrotationalError(
            f"orientation has cyclic triangle {witness}; index is undefined"
        )


def _check_pair(g: Graph, o: Orientation) -> None:
    if o.graph is not g and o.graph != g:
        raise ValueError("orientation belongs to a different graph")


def exit_set(g: Graph, o: Orientation, v: int) -> Graph:
    """Induced subgraph on the in-neighbors of ``v`` (the exit set S^-)."""
    _check_pair(g, o)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    _require_irrotational(o)
    return g.induced_by_mask(o.in_mask(v))


def ph_index(g: Graph, o: Orientation, v: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Poincare-Hopf index 1 - chi(S^-(v))."""
    _check_pair(g, o)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    _require_irrotational(o)
    return 1 - chi_of_mask(g, o.in_mask(v), budget=budget)


@dataclass(frozen=True)
class IndexVector:
    """Per-vertex indices together with the graph's Euler characteristic."""

    indices: tuple[int, ...]
    chi: int

    @property
    def total(self) -> int:
        return sum(self.indices)

    @property
    def matches_chi(self) -> bool:
        return self.total == self.chi

    def __iter__(self):
        return iter(self.indices)


def index_vector(g: Graph, o: Orientation, *, budget: int = DEFAULT_BUDGET) -> IndexVector:
    """All vertex indices; the index sum must equal chi and is checked."""
    _check_pair(g, o)
    _require_irrotational(o)
    indices = tuple(
        1 - chi_of_mask(g, o.in_mask(v), budget=budget) for v in range(g.n)
    )
    chi = graph_chi(g, budget=budget)
    iv = IndexVector(indices, chi)
    if not iv.matches_chi:
        raise RuntimeError(
            f"index sum {iv.total} differs from chi {chi}; enumeration kernel bug"
        )
    return iv


@dataclass(frozen=True)
class FIdentityReport:
    """Both sides of the generating-function identity, plus the verdict."""

    lhs: Polynomial
    rhs: Polynomial
    passed: bool


def verify_f_identity(
    g: Graph, o: Orientation, *, budget: int = DEFAULT_BUDGET
) -> FIdentityReport:
    """Check f_G(t) = 1 + t * sum_v f_{S^-(v)}(t) as exact polynomials.

    A failure here is an implementation bug, never a property of the
    input, so callers may safely assert ``report.passed``.
    """
    _check_pair(g, o)
    _require_irrotational(o)
    lhs = f_function(f_vector(g, budget=budget))
    acc = Polynomial()
    for v in range(g.n):
        counts = clique_size_counts(g, o.in_mask(v), budget=budget)
        fv_counts = [c for c in counts[1:] if c > 0]
        acc = acc + Polynomial([1] + fv_counts)
    rhs = acc.shifted(1) + 1
    return FIdentityReport(lhs=lhs, rhs=rhs, passed=lhs == rhs)


def directed_triangle_census(g: Graph, o: Orientation) -> tuple[int, int]:
    """Count (triangles, cyclically oriented triangles) of the digraph."""
    _check_pair(g, o)
    total = 0
    cyclic = 0
    for a in range(g.n):
        above_a = g.neighbor_mask(a) >> (a + 1)
        for boff in _bits(above_a):
            b = a + 1 + boff
            common = (g.neighbor_mask(a) & g.neighbor_mask(b)) >> (b + 1)
            for coff in _bits(common):
                c = b + 1 + coff
                total += 1
                ab = o.points_to(a, b)
                if ab == o.points_to(b, c) and ab == o.points_to(c, a):
                    cyclic += 1
    return total, cyclic
