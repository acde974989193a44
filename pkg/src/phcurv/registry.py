"""Built-in named graphs, so standard examples run without data files."""

from __future__ import annotations

from .core import Graph, build_graph


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs at least 1 vertex")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def octahedron_graph() -> Graph:
    """K_{2,2,2}: vertices 0..5 with opposite pairs (0,3), (1,4), (2,5)."""
    opposite = {0: 3, 1: 4, 2: 5, 3: 0, 4: 1, 5: 2}
    edges = [
        (i, j) for i in range(6) for j in range(i + 1, 6) if opposite[i] != j
    ]
    return build_graph(6, edges)


def icosahedron_graph() -> Graph:
    """Icosahedron as apex 0, upper ring 1..5, lower ring 6..10, apex 11."""
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    edges = [(0, u) for u in upper] + [(11, w) for w in lower]
    for i in range(5):
        edges.append((upper[i], upper[(i + 1) % 5]))
        edges.append((lower[i], lower[(i + 1) % 5]))
        edges.append((upper[i], lower[i]))
        edges.append((upper[i], lower[(i + 1) % 5]))
    return build_graph(12, edges)


def utility_graph() -> Graph:
    """K_{3,3} with parts {0,1,2} and {3,4,5}."""
    return build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def triangulated_torus(m: int, k: int) -> Graph:
    """Torus grid with one diagonal per square; every vertex sphere is C_6.

    Vertex (i, j) maps to i*k + j; neighbors are the grid steps plus the
    (+1, +1) diagonal, all modulo (m, k). Needs m, k >= 4 so that sphere
    hexagons carry no chords.
    """
    if m < 4 or k < 4:
        raise ValueError("triangulated torus needs both sides >= 4")

    def vid(i: int, j: int) -> int:
        return (i % m) * k + (j % k)

    edges = []
    for i in range(m):
        for j in range(k):
            edges.append((vid(i, j), vid(i + 1, j)))
            edges.append((vid(i, j), vid(i, j + 1)))
            edges.append((vid(i, j), vid(i + 1, j + 1)))
    return build_graph(m * k, edges)


REGISTRY_NAMES = (
    "cycle:k",
    "path:k",
    "complete:k",
    "octahedron",
    "icosahedron",
    "utility",
)


def named_graph(name: str) -> Graph:
    """Resolve a registry name like ``cycle:5`` or ``icosahedron``."""
    base, _, arg = name.partition(":")
    base = base.strip().lower()
    if base in ("octahedron", "icosahedron", "utility"):
        if arg:
            raise ValueError(f"graph {base!r} takes no parameter")
        return {
            "octahedron": octahedron_graph,
            "icosahedron": icosahedron_graph,
            "utility": utility_graph,
        }[base]()
    if base in ("cycle", "path", "complete"):
        if not arg:
            raise ValueError(f"graph {base!r} needs a size, e.g. {base}:5")
        try:
            k = int(arg)
        except ValueError:
            raise ValueError(f"bad size {arg!r} for graph {base!r}") from None
        return {"cycle": cycle_graph, "path": path_graph, "complete": complete_graph}[
            base
        ](k)
    raise ValueError(
        f"unknown graph {name!r}; known: " + ", ".join(REGISTRY_NAMES)
    )
