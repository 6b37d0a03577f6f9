"""Level-set graphs of vertex functions and their completion.

For a function that is nowhere equal to a level ``c``, the hypersurface
graph has one vertex per mixed edge (endpoints on opposite sides of ``c``)
and one edge per mixed triangle.  Completion adds a center vertex for every
mixed clique with at least two vertices on each side, turning each
``K_s x K_t`` face into a cone over its boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Union

from .functions import DegenerateLevelError, VertexFunction, parse_value
from .graph import (
    DEFAULT_CLIQUE_LIMIT,
    CliqueOverflowError,
    SimpleGraph,
    enumerate_cliques,
    unit_sphere,
)

__all__ = [
    "Center",
    "HypersurfaceGraph",
    "MixedEdge",
    "MixedSimplex",
    "SignPartition",
    "complete_hypersurface",
    "hypersurface_graph",
    "mixed_simplices",
    "sign_partition",
    "sphere_hypersurface",
    "w_vector",
]


@dataclass(frozen=True)
class SignPartition:
    host: SimpleGraph
    plus: frozenset[int]
    minus: frozenset[int]

    @property
    def plus_mask(self) -> int:
        return sum(1 << v for v in self.plus)

    def is_plus(self, v: int) -> bool:
        return v in self.plus


@dataclass(frozen=True, order=True)
class MixedSimplex:
    clique: tuple[int, ...]
    s: int
    t: int

    @property
    def dim(self) -> int:
        return len(self.clique) - 1


@dataclass(frozen=True)
class MixedEdge:
    u: int
    v: int

    def to_json(self) -> dict:
        return {"type": "edge", "vertices": [self.u, self.v]}


@dataclass(frozen=True)
class Center:
    simplex: MixedSimplex

    def to_json(self) -> dict:
        return {"type": "center", "vertices": list(self.simplex.clique)}


Tag = Union[MixedEdge, Center]


@dataclass(frozen=True)
class HypersurfaceGraph:
    """A hypersurface graph with per-vertex provenance.

    Tags refer to vertex ids of ``partition.host``; ``host_ids`` translates
    those into ids of an enclosing graph (identity when built on a whole
    graph, the sphere embedding for :func:`sphere_hypersurface`).
    """

    graph: SimpleGraph
    provenance: tuple[Tag, ...]
    partition: SignPartition
    host_ids: tuple[int, ...]

    @property
    def num_centers(self) -> int:
        return sum(isinstance(t, Center) for t in self.provenance)

    def host_provenance(self) -> list[dict]:
        out = []
        for tag in self.provenance:
            d = tag.to_json()
            d["vertices"] = [self.host_ids[v] for v in d["vertices"]]
            out.append(d)
        return out

    def to_dict(self) -> dict:
        d = self.graph.to_dict()
        d["provenance"] = self.host_provenance()
        return d

    def to_dot(self, name: str = "Gf") -> str:
        labels = ["-".join(map(str, t["vertices"])) for t in self.host_provenance()]
        shapes = ["box" if isinstance(t, Center) else "ellipse" for t in self.provenance]
        return self.graph.to_dot(name, labels=labels, shapes=shapes)


def sign_partition(G: SimpleGraph, f: VertexFunction | list, level=0) -> SignPartition:
    """Split vertices into ``f > level`` and ``f < level``."""
    values = f.values if isinstance(f, VertexFunction) else tuple(map(parse_value, f))
    if len(values) != G.n:
        raise ValueError(f"function has {len(values)} values, graph has {G.n} vertices")
    c = parse_value(level)
    plus, minus = set(), set()
    for v, val in enumerate(values):
        if val > c:
            plus.add(v)
        elif val < c:
            minus.add(v)
        else:
            raise DegenerateLevelError(f"f({v}) = {val} equals the level {c}")
    return SignPartition(G, frozenset(plus), frozenset(minus))


def mixed_simplices(P: SignPartition, max_dim: int | None = None,
                    limit: int = DEFAULT_CLIQUE_LIMIT) -> Iterator[MixedSimplex]:
    """Every clique of the host meeting both sides, in clique-enumeration order."""
    if not P.plus or not P.minus:
        return
    plus = P.plus
    for clique in enumerate_cliques(P.host, max_dim=max_dim, limit=limit):
        s = sum(v in plus for v in clique)
        if 0 < s < len(clique):
            yield MixedSimplex(clique, s, len(clique) - s)


def w_vector(P: SignPartition, limit: int = DEFAULT_CLIQUE_LIMIT) -> tuple[int, ...]:
    """``(W_0, W_1, ...)``: mixed cliques by dimension; ``W_0`` is always 0.

    Trailing zeros are dropped, so a partition with no mixed edge gives ``()``.
    """
    counts = [0]
    for ms in mixed_simplices(P, limit=limit):
        while len(counts) <= ms.dim:
            counts.append(0)
        counts[ms.dim] += 1
    return tuple(counts) if len(counts) > 1 else ()


def hypersurface_graph(P: SignPartition) -> HypersurfaceGraph:
    G = P.host
    plus = P.plus
    mixed = [(u, v) for u, v in G.edges() if (u in plus) != (v in plus)]
    index = {e: i for i, e in enumerate(mixed)}
    masks = [0] * len(mixed)
    for ms in mixed_simplices(P, max_dim=2):
        if ms.dim != 2:
            continue
        inner = [e for e in combinations(ms.clique, 2) if e in index]
        assert len(inner) == 2, f"mixed triangle {ms.clique} has {len(inner)} mixed edges"
        a, b = index[inner[0]], index[inner[1]]
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    tags = tuple(MixedEdge(u, v) for u, v in mixed)
    return HypersurfaceGraph(SimpleGraph._from_masks(masks), tags, P, tuple(range(G.n)))


def complete_hypersurface(H: HypersurfaceGraph,
                          limit: int = DEFAULT_CLIQUE_LIMIT) -> HypersurfaceGraph:
    """Add one center per mixed clique with at least two vertices on each side.

    A center is joined to every mixed edge inside its clique and to the
    centers of cliques strictly containing or contained in it.  Centers
    already present in ``H`` are not added again.
    """
    P = H.partition
    have = {t.simplex for t in H.provenance if isinstance(t, Center)}
    new = [ms for ms in mixed_simplices(P, limit=limit) if ms.s >= 2 and ms.t >= 2
           and ms not in have]
    if not new:
        return H
    new.sort(key=lambda ms: (len(ms.clique), ms.clique))
    tags = list(H.provenance) + [Center(ms) for ms in new]
    vid = {t: i for i, t in enumerate(tags)}
    center_id = {t.simplex.clique: i for t, i in vid.items() if isinstance(t, Center)}
    masks = [H.graph.neighbor_mask(v) for v in H.graph.vertices()] + [0] * len(new)
    if len(center_id) > limit:
        raise CliqueOverflowError(f"more than {limit} centers")

    def link(a: int, b: int) -> None:
        masks[a] |= 1 << b
        masks[b] |= 1 << a

    plus = P.plus
    for ms in new:
        c = vid[Center(ms)]
        pos = [v for v in ms.clique if v in plus]
        neg = [v for v in ms.clique if v not in plus]
        for u in pos:
            for w in neg:
                link(c, vid[MixedEdge(min(u, w), max(u, w))])
        # strictly smaller centers inside ms; larger ones link back from their own side
        for i in range(2, len(pos) + 1):
            for sub_p in combinations(pos, i):
                for j in range(2, len(neg) + 1):
                    if i == len(pos) and j == len(neg):
                        continue
                    for sub_n in combinations(neg, j):
                        link(c, center_id[tuple(sorted(sub_p + sub_n))])
    return HypersurfaceGraph(SimpleGraph._from_masks(masks), tuple(tags), P, H.host_ids)


def sphere_hypersurface(G: SimpleGraph, f: VertexFunction, x: int,
                        completed: bool = True) -> HypersurfaceGraph:
    """A_f(x) (``completed=False``) or its completion B_f(x).

    The level set of ``f - f(x)`` inside the unit sphere of ``x``.
    """
    S, prov = unit_sphere(G, x)
    fx = f[x]
    vals = [f[y] for y in prov]
    if fx in vals:
        raise DegenerateLevelError(f"f is not injective on the closed neighborhood of {x}")
    P = sign_partition(S, vals, fx)
    H = hypersurface_graph(P)
    H = HypersurfaceGraph(H.graph, H.provenance, P, prov)
    return complete_hypersurface(H) if completed else H
