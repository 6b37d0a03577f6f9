"""Immutable simple graphs, clique enumeration and Euler characteristic.

Vertices are dense integers ``0 .. n-1``.  Internally every vertex carries
its neighborhood both as a sorted tuple and as an integer bitmask; the
bitmask form drives all clique work.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence

__all__ = [
    "DEFAULT_CLIQUE_LIMIT",
    "CliqueOverflowError",
    "GraphInputError",
    "SimpleGraph",
    "are_isomorphic",
    "clique_degrees",
    "connected_components",
    "enumerate_cliques",
    "euler_characteristic",
    "f_vector",
    "from_edge_list",
    "induced_subgraph",
    "unit_sphere",
]

DEFAULT_CLIQUE_LIMIT = 10**8


class GraphInputError(ValueError):
    """Raised for malformed graph input (bad ids, loops, bad JSON)."""


class CliqueOverflowError(RuntimeError):
    """Raised when a clique scan exceeds its configured limit."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Finite undirected graph without loops or multi-edges.

    Instances are immutable; use :func:`from_edge_list` or the derived-graph
    operations to build new ones.
    """

    __slots__ = ("_n", "_adj", "_masks", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphInputError(f"vertex count must be a non-negative integer, got {n!r}")
        masks = [0] * n
        for e in edges:
            try:
                u, v = e
                u, v = int(u), int(v)
            except (TypeError, ValueError):
                raise GraphInputError(f"edge must be a pair of integers, got {e!r}") from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._set(masks)

    def _set(self, masks: list[int]) -> None:
        self._n = len(masks)
        self._masks = tuple(masks)
        self._adj = tuple(tuple(_bits(m)) for m in masks)
        self._m = sum(len(a) for a in self._adj) // 2

    @classmethod
    def _from_masks(cls, masks: list[int]) -> "SimpleGraph":
        # caller guarantees symmetry and no loops
        g = cls.__new__(cls)
        g._set(masks)
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and 0 <= v < self._n and bool(self._masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in self._adj[u] if v > u]

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise GraphInputError(f"invalid vertex id {v!r} for graph with {self._n} vertices")

    def is_symmetric(self) -> bool:
        m = self._masks
        return all(not (m[u] >> u & 1) for u in range(self._n)) and all(
            m[v] >> u & 1 for u in range(self._n) for v in self._adj[u]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self._n}, edges={self._m})"

    # serialization

    def to_dict(self) -> dict:
        return {"n": self._n, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "SimpleGraph":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise GraphInputError('graph JSON must be an object with "n" and "edges"')
        if not isinstance(data["edges"], list):
            raise GraphInputError('"edges" must be a list')
        return cls(data["n"], data["edges"])

    @classmethod
    def from_json(cls, text: str) -> "SimpleGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    def to_dot(self, name: str = "G", labels: Sequence[str] | None = None,
               shapes: Sequence[str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self._n):
            attrs = [f'label="{labels[v] if labels else v}"']
            if shapes:
                attrs.append(f"shape={shapes[v]}")
            lines.append(f"  {v} [{', '.join(attrs)}];")
        lines.extend(f"  {u} -- {v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    return SimpleGraph(n, edges)


def induced_subgraph(G: SimpleGraph, S: Iterable[int]) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Induced subgraph on ``S`` relabeled densely.

    Returns the graph and the provenance tuple mapping new ids to old ids
    (in increasing order of the old ids).
    """
    keep = sorted(set(S))
    for v in keep:
        G._check_vertex(v)
    index = {old: new for new, old in enumerate(keep)}
    masks = []
    for old in keep:
        m = 0
        for w in G._adj[old]:
            j = index.get(w)
            if j is not None:
                m |= 1 << j
        masks.append(m)
    return SimpleGraph._from_masks(masks), tuple(keep)


def unit_sphere(G: SimpleGraph, x: int) -> tuple[SimpleGraph, tuple[int, ...]]:
    """The unit sphere S(x): induced subgraph on the neighbors of ``x``."""
    G._check_vertex(x)
    return induced_subgraph(G, G._adj[x])


def enumerate_cliques(G: SimpleGraph, max_dim: int | None = None,
                      limit: int = DEFAULT_CLIQUE_LIMIT) -> Iterator[tuple[int, ...]]:
    """Yield every nonempty complete subgraph exactly once.

    Cliques are strictly increasing vertex tuples, emitted in lexicographic
    order.  ``max_dim`` caps the dimension (size - 1) of emitted cliques.
    """
    max_size = None if max_dim is None else max_dim + 1
    if max_size is not None and max_size < 1:
        return
    up = _upper_masks(G)
    counter = [0]
    stack: list[int] = []
    # each clique is reached from its smallest vertex through larger neighbors only
    for v in range(G.n):
        stack.append(v)
        counter[0] += 1
        if counter[0] > limit:
            raise CliqueOverflowError(f"more than {limit} cliques")
        yield (v,)
        if max_size is None or max_size > 1:
            yield from _extend_from(up, up[v], stack, max_size, limit, counter)
        stack.pop()


def _extend_from(up, cand, stack, max_size, limit, counter):
    while cand:
        low = cand & -cand
        u = low.bit_length() - 1
        cand ^= low
        stack.append(u)
        counter[0] += 1
        if counter[0] > limit:
            raise CliqueOverflowError(f"more than {limit} cliques")
        yield tuple(stack)
        if max_size is None or len(stack) < max_size:
            yield from _extend_from(up, cand & up[u], stack, max_size, limit, counter)
        stack.pop()


def _upper_masks(G: SimpleGraph) -> list[int]:
    return [m >> (v + 1) << (v + 1) for v, m in enumerate(G._masks)]


def _count_cliques(masks: Sequence[int], vertex_mask: int | None = None,
                   limit: int = DEFAULT_CLIQUE_LIMIT) -> list[int]:
    """Clique counts by size for the subgraph induced on ``vertex_mask``."""
    n = len(masks)
    if vertex_mask is None:
        vertex_mask = (1 << n) - 1
    counts: list[int] = []
    total = [0]

    def rec(cand: int, depth: int) -> None:
        if len(counts) <= depth:
            counts.append(0)
        k = cand.bit_count()
        counts[depth] += k
        total[0] += k
        if total[0] > limit:
            raise CliqueOverflowError(f"more than {limit} cliques")
        while cand:
            low = cand & -cand
            cand ^= low
            nxt = cand & masks[low.bit_length() - 1]
            if nxt:
                rec(nxt, depth + 1)

    if vertex_mask:
        rec(vertex_mask, 0)
    return counts


def f_vector(G: SimpleGraph, limit: int = DEFAULT_CLIQUE_LIMIT) -> tuple[int, ...]:
    """``(v_0, v_1, ...)``: number of K_{k+1} subgraphs for each k."""
    return tuple(_count_cliques(G._masks, limit=limit))


def euler_characteristic(G: SimpleGraph) -> int:
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(f_vector(G)))


def _chi_of_mask(G: SimpleGraph, vertex_mask: int) -> int:
    counts = _count_cliques(G._masks, vertex_mask)
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(counts))


def clique_degrees(G: SimpleGraph, x: int) -> tuple[int, ...]:
    """``(V_0(x), V_1(x), ...)``: the f-vector of the unit sphere S(x)."""
    G._check_vertex(x)
    return tuple(_count_cliques(G._masks, G._masks[x]))


def connected_components(G: SimpleGraph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = 0
    comps = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= G._masks[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(tuple(_bits(comp)))
    return comps


def are_isomorphic(G: SimpleGraph, H: SimpleGraph) -> bool:
    """Backtracking isomorphism test for small graphs.

    Candidates are restricted to equal degree; each partial map is checked
    for edge consistency against all previously mapped vertices.
    """
    if G.n != H.n or G.num_edges != H.num_edges:
        return False
    if sorted(map(len, G._adj)) != sorted(map(len, H._adj)):
        return False
    n = G.n
    # high-degree vertices first prunes fastest
    order = sorted(range(n), key=lambda v: (-len(G._adj[v]), v))
    image = [-1] * n
    used = 0

    def place(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or len(H._adj[w]) != len(G._adj[v]):
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if (G._masks[v] >> u & 1) != (H._masks[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if place(i + 1):
                    return True
                used ^= 1 << w
                image[v] = -1
        return False

    return place(0)

