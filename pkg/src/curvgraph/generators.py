"""Example graph families.

All generators return :class:`~curvgraph.graph.SimpleGraph` instances with
deterministic vertex numbering.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import GraphInputError, SimpleGraph

__all__ = [
    "GENERATORS",
    "complete",
    "cross_polytope",
    "cube",
    "cyclic",
    "dodecahedron",
    "erdos_renyi",
    "icosahedron",
    "octahedron",
    "path",
    "wheel",
]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphInputError(msg)


def cyclic(n: int) -> SimpleGraph:
    _require(n >= 3, f"cyclic graph needs n >= 3, got {n}")
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> SimpleGraph:
    _require(n >= 0, f"complete graph needs n >= 0, got {n}")
    return SimpleGraph(n, combinations(range(n), 2))


def path(n: int) -> SimpleGraph:
    """Path with ``n`` vertices."""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def wheel(n: int) -> SimpleGraph:
    """Wheel W_n: the cycle C_n on ``0..n-1`` plus hub ``n``."""
    _require(n >= 3, f"wheel needs n >= 3, got {n}")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return SimpleGraph(n + 1, rim + [(i, n) for i in range(n)])


def cross_polytope(d: int) -> SimpleGraph:
    """d-dimensional cross polytope graph.

    Complete multipartite graph with ``d + 1`` parts ``{2i, 2i+1}``, so
    ``2d + 2`` vertices; vertex ``2i`` is antipodal to ``2i + 1``.
    """
    _require(d >= 1, f"cross polytope needs d >= 1, got {d}")
    n = 2 * d + 2
    return SimpleGraph(n, [(u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2])


def octahedron() -> SimpleGraph:
    return cross_polytope(2)


def icosahedron() -> SimpleGraph:
    # 0 = north pole, 1..5 upper ring, 6..10 lower ring, 11 = south pole
    edges = []
    for i in range(5):
        a, b = 1 + i, 1 + (i + 1) % 5
        c, d = 6 + i, 6 + (i + 1) % 5
        edges += [(0, a), (a, b), (a, c), (a, d), (c, d), (11, c)]
    return SimpleGraph(12, edges)


def dodecahedron() -> SimpleGraph:
    """Generalized Petersen graph GP(10, 2)."""
    edges = []
    for i in range(10):
        edges += [(i, (i + 1) % 10), (i, 10 + i), (10 + i, 10 + (i + 2) % 10)]
    return SimpleGraph(20, edges)


def cube() -> SimpleGraph:
    """The 3-cube Q_3; vertices are bit strings, edges flip one bit."""
    return SimpleGraph(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3)])


def erdos_renyi(n: int, p: float, seed: int) -> SimpleGraph:
    """G(n, p) drawn with a private ``random.Random(seed)``."""
    _require(n >= 0, f"n must be >= 0, got {n}")
    _require(0.0 <= p <= 1.0, f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    return SimpleGraph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


# CLI name -> (function, parameter parsers)
GENERATORS = {
    "cyclic": (cyclic, (int,)),
    "complete": (complete, (int,)),
    "path": (path, (int,)),
    "wheel": (wheel, (int,)),
    "cross-polytope": (cross_polytope, (int,)),
    "octahedron": (octahedron, ()),
    "icosahedron": (icosahedron, ()),
    "dodecahedron": (dodecahedron, ()),
    "cube": (cube, ()),
    "er": (erdos_renyi, (int, float)),
}
