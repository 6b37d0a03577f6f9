"""Dimension, geometric-graph recognition and graph constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .graph import (
    CliqueOverflowError,
    SimpleGraph,
    euler_characteristic,
    unit_sphere,
)

__all__ = [
    "GeometricWitness",
    "chordless_cycles",
    "graph_product",
    "inductive_dimension",
    "is_geometric",
    "pyramid_extension",
    "stellate_cycles",
    "suspension",
]


def inductive_dimension(G: SimpleGraph) -> Fraction:
    """dim(empty) = -1, otherwise 1 + the mean of dim(S(x)) over vertices."""
    return _dimension(G)


@lru_cache(maxsize=4096)
def _dimension(G: SimpleGraph) -> Fraction:
    if G.n == 0:
        return Fraction(-1)
    total = sum((_dimension(unit_sphere(G, x)[0]) for x in G.vertices()), Fraction(0))
    return 1 + total / G.n


@dataclass
class GeometricWitness:
    """Outcome of :func:`is_geometric`.

    ``valid`` is False when some vertex fails; ``vertex`` and ``reason`` then
    describe the first failure (outermost graph ids for ``vertex``; the
    reason text includes the path through nested spheres).
    """

    d: int
    valid: bool
    sphere_chi: dict[int, int] = field(default_factory=dict)
    vertex: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def is_geometric(G: SimpleGraph, d: int) -> GeometricWitness:
    """Check that G is a d-dimensional geometric graph.

    For d = 1 every unit sphere must be exactly two isolated vertices.  For
    d > 1 every unit sphere must have Euler characteristic 1 - (-1)^d and be
    (d-1)-geometric itself.  Spheres need not be connected.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    witness = GeometricWitness(d=d, valid=True)
    if G.n == 0:
        return GeometricWitness(d=d, valid=False, reason="empty graph")
    target = 1 - (-1) ** d
    for x in G.vertices():
        S, prov = unit_sphere(G, x)
        chi = euler_characteristic(S)
        witness.sphere_chi[x] = chi
        if d == 1:
            if S.n != 2 or S.num_edges != 0:
                return _fail(witness, x, f"S({x}) has {S.n} vertices and {S.num_edges} edges, "
                                         "expected two isolated vertices")
            continue
        if chi != target:
            return _fail(witness, x, f"chi(S({x})) = {chi} != {target}")
        inner = _is_geometric_cached(S, d - 1)
        if not inner.valid:
            return _fail(witness, x, f"S({x}) is not {d - 1}-geometric: "
                                     f"at sphere vertex {prov[inner.vertex]}: {inner.reason}")
    return witness


@lru_cache(maxsize=4096)
def _is_geometric_cached(G: SimpleGraph, d: int) -> GeometricWitness:
    return is_geometric(G, d)


def _fail(w: GeometricWitness, x: int, reason: str) -> GeometricWitness:
    w.valid = False
    w.vertex = x
    w.reason = reason
    return w


def pyramid_extension(G: SimpleGraph) -> SimpleGraph:
    """Cone over G: new vertex ``G.n`` joined to every old vertex."""
    apex = G.n
    return SimpleGraph(G.n + 1, G.edges() + [(v, apex) for v in G.vertices()])


def suspension(G: SimpleGraph) -> SimpleGraph:
    """Two non-adjacent apexes ``G.n`` and ``G.n + 1``, each joined to all of G."""
    a, b = G.n, G.n + 1
    cone = [(v, a) for v in G.vertices()] + [(v, b) for v in G.vertices()]
    return SimpleGraph(G.n + 2, G.edges() + cone)


def graph_product(G: SimpleGraph, H: SimpleGraph) -> SimpleGraph:
    """Cartesian product; vertex ``(v, w)`` gets id ``v * H.n + w``."""
    m = H.n
    edges = [(v * m + w1, v * m + w2) for v in G.vertices() for w1, w2 in H.edges()]
    edges += [(v1 * m + w, v2 * m + w) for v1, v2 in G.edges() for w in H.vertices()]
    return SimpleGraph(G.n * m, edges)


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def chordless_cycles(G: SimpleGraph, max_len: int, min_len: int = 4,
                     limit: int = 10**6) -> list[tuple[int, ...]]:
    """Induced cycles with ``min_len <= length <= max_len``.

    Each cycle is returned once, rotated to start at its smallest vertex with
    the smaller neighbor second.  Paths are grown from their smallest vertex
    and kept induced at every step.
    """
    found: set[tuple[int, ...]] = set()
    masks = [G.neighbor_mask(v) for v in G.vertices()]

    def grow(path: list[int], inside: int) -> None:
        start, last = path[0], path[-1]
        for w in G.neighbors(last):
            if w <= start or inside >> w & 1:
                continue
            # w may touch only `last` among interior path vertices, and `start` only if closing
            interior = inside & ~(1 << start) & ~(1 << last)
            if masks[w] & interior:
                continue
            if len(path) >= 2 and masks[w] >> start & 1:
                if len(path) + 1 >= min_len:
                    found.add(_canonical_cycle(path + [w]))
                    if len(found) > limit:
                        raise CliqueOverflowError(f"more than {limit} chordless cycles")
                continue
            if len(path) + 1 < max_len:
                path.append(w)
                grow(path, inside | 1 << w)
                path.pop()

    for s in G.vertices():
        grow([s], 1 << s)
    return sorted(found)


def stellate_cycles(G: SimpleGraph, max_len: int = 4, cap: int = 10**6) -> SimpleGraph:
    """Cone off every chordless cycle of length 4..max_len.

    Center vertices are appended after the original vertices, one per
    cycle, in the sorted order of :func:`chordless_cycles`.
    """
    if max_len > 8:
        raise ValueError(f"max_len is bounded by 8, got {max_len}")
    cycles = chordless_cycles(G, max_len, limit=cap)
    edges = G.edges()
    for i, cyc in enumerate(cycles):
        edges += [(v, G.n + i) for v in cyc]
    return SimpleGraph(G.n + len(cycles), edges)
