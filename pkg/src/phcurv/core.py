"""Graphs, Whitney complexes, f-vectors and their generating polynomials.

The enumeration kernel works on bitset adjacency: a neighborhood is one
Python integer, so candidate-set intersections are single AND operations.
Counting complete subgraphs uses pivot pruning over a degeneracy order,
which keeps dense desk-scale graphs (a few thousand vertices, bounded
clique number) in the milliseconds range without materializing the
complex. A configurable simplex budget turns runaway enumeration into a
clean error instead of an out-of-memory crash.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """Simplex enumeration exceeded the configured budget."""


class TruncatedComplexError(ValueError):
    """Operation needs the full complex but was given a truncated one."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable finite simple graph on vertices 0..n-1.

    Adjacency is stored as one bitmask per vertex. ``labels``, when set,
    maps this graph's vertex ids back to the graph it was induced from.
    """

    __slots__ = ("n", "_adj", "labels")

    def __init__(self, n: int, adj: Sequence[int], labels: tuple[int, ...] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        self.n = n
        self._adj = tuple(adj)
        self.labels = labels

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return (self._adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            for off in _bits(rest):
                out.append((u, u + 1 + off))
        return out

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``; labels record original ids."""
        verts = sorted(set(vertices))
        for v in verts:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        pos = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for i, v in enumerate(verts):
            for w in _bits(self._adj[v]):
                if w in pos:
                    adj[i] |= 1 << pos[w]
        return Graph(len(verts), adj, labels=tuple(verts))

    def induced_by_mask(self, mask: int) -> "Graph":
        return self.induced(_bits(mask))

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex bijection v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        adj = [0] * self.n
        for v in range(self.n):
            m = 0
            for w in _bits(self._adj[v]):
                m |= 1 << perm[w]
            adj[perm[v]] = m
        return Graph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and deduplicate an edge list into a Graph.

    Rejects self-loops and out-of-range endpoints instead of dropping
    them silently.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    if not 0 <= source < g.n:
        raise ValueError("source out of range")
    dist = [-1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.neighbor_mask(v)
        nxt &= ~seen
        d += 1
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


# ---------------------------------------------------------------------------
# Clique enumeration kernel
# ---------------------------------------------------------------------------


def _ensure_recursion_depth(need: int) -> None:
    if sys.getrecursionlimit() < need + 128:
        sys.setrecursionlimit(need + 256)


def _degeneracy_order(adj: Sequence[int], mask: int) -> list[int]:
    """Peel minimum-degree vertices of the subgraph induced on ``mask``."""
    deg = {v: (adj[v] & mask).bit_count() for v in _bits(mask)}
    order = []
    remaining = mask
    while deg:
        v = min(deg, key=lambda u: (deg[u], u))
        order.append(v)
        del deg[v]
        remaining &= ~(1 << v)
        for w in _bits(adj[v] & remaining):
            deg[w] -= 1
    return order


def clique_size_counts(
    g: Graph,
    mask: int | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
    max_size: int | None = None,
) -> list[int]:
    """Count the complete subgraphs of the subgraph induced on ``mask``.

    Returns ``counts`` with ``counts[s]`` = number of cliques on s
    vertices (counts[0] is always 0; the empty set is not a simplex
    here). Uses the pivot recursion: at a leaf reached with h held
    vertices and p accumulated pivots, every union of the held set with
    a pivot subset is a distinct clique, contributing C(p, k) cliques of
    size h+k. Each clique of the graph is counted at exactly one leaf.

    Counting is capped at ``max_size`` vertices per clique when given;
    a cap that actually removes cliques is reported via truncation by
    the callers that care (see :func:`f_vector`).
    """
    counts, _ = _clique_counts_impl(g, mask, budget, max_size)
    return counts


def _clique_counts_impl(
    g: Graph,
    mask: int | None,
    budget: int,
    max_size: int | None,
) -> tuple[list[int], bool]:
    adj = g._adj
    m = g.vertex_mask if mask is None else mask
    nbits = m.bit_count()
    counts = [0] * (nbits + 1)
    if m == 0:
        return counts, False
    cap = nbits if max_size is None else max_size
    if cap < 1:
        raise ValueError("max_size must be at least 1")
    cap = min(cap, nbits)
    _ensure_recursion_depth(nbits)

    total = 0
    truncated = False

    def rec(cand: int, h: int, p: int) -> None:
        nonlocal total, truncated
        if h == cap:
            counts[h] += 1
            total += 1
            if p or cand:
                truncated = True
            if total > budget:
                raise BudgetExceededError(
                    f"simplex budget {budget} exceeded while counting cliques"
                )
            return
        if cand == 0:
            top = min(p, cap - h)
            if top < p:
                truncated = True
            for k in range(top + 1):
                c = math.comb(p, k)
                counts[h + k] += c
                total += c
            if total > budget:
                raise BudgetExceededError(
                    f"simplex budget {budget} exceeded while counting cliques"
                )
            return
        # pivot on the candidate covering most of the candidate set
        best_u, best = -1, -1
        scan = cand
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            scan ^= low
            c = (cand & adj[u]).bit_count()
            if c > best:
                best, best_u = c, u
        rec(cand & adj[best_u], h, p + 1)
        rest = cand & ~adj[best_u] & ~(1 << best_u)
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cand &= ~low
            rec(cand & adj[v], h + 1, p)

    todo = m
    for v in _degeneracy_order(adj, m):
        todo &= ~(1 << v)
        rec(adj[v] & todo & m, 1, 0)
    return counts, truncated


def _enumerate_cliques(
    g: Graph,
    budget: int,
    max_size: int | None,
) -> tuple[list[list[tuple[int, ...]]], bool]:
    """Materialize every clique, grouped by size, in lexicographic order."""
    adj = g._adj
    n = g.n
    cap = n if max_size is None else max_size
    _ensure_recursion_depth(n)
    by_size: list[list[tuple[int, ...]]] = [[] for _ in range(cap + 1)]
    emitted = 0
    truncated = False

    def rec(base: tuple[int, ...], cand: int) -> None:
        nonlocal emitted, truncated
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique = base + (v,)
            emitted += 1
            if emitted > budget:
                raise BudgetExceededError(
                    f"simplex budget {budget} exceeded while enumerating cliques"
                )
            by_size[len(clique)].append(clique)
            nxt = cand & adj[v]
            if nxt:
                if len(clique) < cap:
                    rec(clique, nxt)
                else:
                    truncated = True

    if n and cap >= 1:
        rec((), g.vertex_mask)
    return by_size, truncated


# ---------------------------------------------------------------------------
# Simplicial complexes and f-vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FVector:
    """Simplex counts (f_0, f_1, ..., f_d), one entry per dimension."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c <= 0 for c in self.counts):
            raise ValueError("f-vector entries must be positive up to the dimension")

    @property
    def dim(self) -> int:
        return len(self.counts) - 1

    def euler_characteristic(self) -> int:
        return sum(c if k % 2 == 0 else -c for k, c in enumerate(self.counts))

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class SimplicialComplex:
    """Whitney complex of a graph: complete subgraphs grouped by dimension.

    ``levels[k]`` holds the k-simplices as ascending vertex tuples in
    lexicographic order. ``truncated`` is set when a dimension cap
    removed simplices that exist in the full complex.
    """

    levels: tuple[tuple[tuple[int, ...], ...], ...]
    truncated: bool = False

    @property
    def dim(self) -> int:
        return len(self.levels) - 1

    @property
    def simplex_count(self) -> int:
        return sum(len(level) for level in self.levels)

    def f_vector(self) -> FVector:
        return FVector(tuple(len(level) for level in self.levels))

    def all_simplices(self) -> Iterator[tuple[int, ...]]:
        for level in self.levels:
            yield from level


def whitney_complex(
    g: Graph,
    max_dim: int | None = None,
    *,
    budget: int = DEFAULT_BUDGET,
) -> SimplicialComplex:
    """All complete subgraphs of ``g``, optionally capped at ``max_dim``."""
    if max_dim is not None and max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    max_size = None if max_dim is None else max_dim + 1
    by_size, truncated = _enumerate_cliques(g, budget, max_size)
    levels = []
    for size in range(1, len(by_size)):
        if not by_size[size]:
            break
        levels.append(tuple(by_size[size]))
    return SimplicialComplex(tuple(levels), truncated=truncated)


def euler_characteristic(c: SimplicialComplex) -> int:
    """Alternating sum of simplex counts; refuses truncated complexes."""
    if c.truncated:
        raise TruncatedComplexError(
            "Euler characteristic of a truncated complex would be wrong"
        )
    return sum(len(level) if k % 2 == 0 else -len(level) for k, level in enumerate(c.levels))


def f_vector(g: Graph, max_dim: int | None = None, *, budget: int = DEFAULT_BUDGET) -> FVector:
    """f-vector of the Whitney complex, computed without materializing it."""
    if max_dim is not None and max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    max_size = None if max_dim is None else max_dim + 1
    counts, _ = _clique_counts_impl(g, None, budget, max_size)
    last = 0
    for s in range(len(counts) - 1, 0, -1):
        if counts[s]:
            last = s
            break
    return FVector(tuple(counts[1 : last + 1]))


def chi_of_mask(g: Graph, mask: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Euler characteristic of the Whitney complex induced on ``mask``."""
    counts = clique_size_counts(g, mask, budget=budget)
    return sum(c if s % 2 == 1 else -c for s, c in enumerate(counts) if s >= 1)


def graph_chi(g: Graph, *, budget: int = DEFAULT_BUDGET) -> int:
    """Euler characteristic of the full Whitney complex of ``g``."""
    return chi_of_mask(g, g.vertex_mask, budget=budget)


def unit_sphere(g: Graph, v: int) -> Graph:
    """Induced subgraph on the neighbors of ``v`` (labels give original ids)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.induced_by_mask(g.neighbor_mask(v))


# ---------------------------------------------------------------------------
# Generating polynomials with exact rational coefficients
# ---------------------------------------------------------------------------


class Polynomial:
    """Dense univariate polynomial over exact rationals.

    Coefficients are ``Fraction`` values indexed by degree, with no
    trailing zeros; the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(size)]
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other: "int | Fraction") -> "Polynomial":
        return Polynomial([other]) - self

    def __mul__(self, other: "Polynomial | int | Fraction") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial([c * Fraction(other) for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shifted(self, k: int = 1) -> "Polynomial":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return Polynomial((Fraction(0),) * k + self.coeffs)

    def __call__(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def antiderivative(self) -> "Polynomial":
        """Termwise integral with zero constant term."""
        return Polynomial(
            [Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                t = "t" if k == 1 else f"t^{k}"
                parts.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(parts)


def f_function(fv: FVector) -> Polynomial:
    """Generating polynomial 1 + f_0 t + f_1 t^2 + ... + f_d t^(d+1)."""
    return Polynomial((1,) + tuple(fv.counts))


def antiderivative(p: Polynomial) -> Polynomial:
    return p.antiderivative()


def chi_from_f_function(p: Polynomial) -> Fraction:
    """Euler characteristic via the inclusion-exclusion identity 1 - f(-1)."""
    return 1 - p(Fraction(-1))
