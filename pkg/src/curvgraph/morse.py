"""Curvature, Poincare-Hopf indices and their integral-geometric expectation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

import numpy as np

from .functions import VertexFunction
from .graph import (
    SimpleGraph,
    _chi_of_mask,
    _count_cliques,
    clique_degrees,
    euler_characteristic,
    induced_subgraph,
)
from .hypersurface import sphere_hypersurface, w_vector

__all__ = [
    "EXACT_DEGREE_LIMIT",
    "IndexReport",
    "MonteCarloEstimate",
    "VertexIndex",
    "curvature",
    "expected_sublevel_counts",
    "index",
    "index_expectation",
    "index_expectation_enumerated",
    "index_expectation_mc",
    "index_report",
    "sub_level_sphere",
    "symmetric_index",
]

EXACT_DEGREE_LIMIT = 8


def _below_mask(G: SimpleGraph, f: VertexFunction, x: int, sign: int) -> int:
    fx = f[x]
    m = 0
    for y in G.neighbors(x):
        if (f[y] < fx) if sign < 0 else (f[y] > fx):
            m |= 1 << y
    return m


def sub_level_sphere(G: SimpleGraph, f: VertexFunction, x: int, sign: int = -1) -> SimpleGraph:
    """Part of S(x) where f is below f(x) (``sign=-1``) or above it (``sign=+1``)."""
    f.check_size(G.n)
    below = [y for y in G.neighbors(x) if (f[y] < f[x] if sign < 0 else f[y] > f[x])]
    return induced_subgraph(G, below)[0]


def index(G: SimpleGraph, f: VertexFunction, x: int) -> int:
    """i_f(x) = 1 - chi(S_f^-(x))."""
    f.check_size(G.n)
    G._check_vertex(x)
    return 1 - _chi_of_mask(G, _below_mask(G, f, x, -1))


def symmetric_index(G: SimpleGraph, f: VertexFunction, x: int) -> Fraction:
    return Fraction(index(G, f, x) + index(G, -f, x), 2)


def curvature(G: SimpleGraph, x: int) -> Fraction:
    """K(x) = sum_k (-1)^k V_{k-1}(x) / (k+1) with V_{-1}(x) = 1."""
    V = (1,) + clique_degrees(G, x)
    return sum((Fraction((-1) ** k * c, k + 1) for k, c in enumerate(V)), Fraction(0))


@dataclass(frozen=True)
class VertexIndex:
    vertex: int
    i_f: int
    i_minus_f: int
    j_f: Fraction
    W: tuple[int, ...]
    chi_B: int
    K: Fraction
    chi_S: int

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "i_f": self.i_f,
            "i_minus_f": self.i_minus_f,
            "j_f": str(self.j_f),
            "W": list(self.W),
            "chi_B": self.chi_B,
            "K": str(self.K),
        }


@dataclass(frozen=True)
class IndexReport:
    graph: SimpleGraph
    function: VertexFunction
    vertices: tuple[VertexIndex, ...]

    def index_sum(self) -> int:
        return sum(v.i_f for v in self.vertices)

    def curvature_sum(self) -> Fraction:
        return sum((v.K for v in self.vertices), Fraction(0))

    def __getitem__(self, x: int) -> VertexIndex:
        return self.vertices[x]


def index_report(G: SimpleGraph, f: VertexFunction) -> IndexReport:
    """Every per-vertex quantity for one function, ordered by vertex id."""
    f.check_size(G.n)
    rows = []
    for x in G.vertices():
        B = sphere_hypersurface(G, f, x, completed=True)
        i_minus = 1 - _chi_of_mask(G, _below_mask(G, f, x, +1))
        i_plus = 1 - _chi_of_mask(G, _below_mask(G, f, x, -1))
        rows.append(VertexIndex(
            vertex=x,
            i_f=i_plus,
            i_minus_f=i_minus,
            j_f=Fraction(i_plus + i_minus, 2),
            W=w_vector(B.partition),
            chi_B=euler_characteristic(B.graph),
            K=curvature(G, x),
            chi_S=_chi_of_mask(G, G.neighbor_mask(x)),
        ))
    return IndexReport(G, f, tuple(rows))


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    trials: int
    seed: int

    def within(self, value, sigmas: float = 4.0) -> bool:
        return abs(self.mean - float(value)) <= sigmas * self.stderr


def _subset_weights(deg: int) -> list[Fraction]:
    # probability of one particular below-set of size a under a uniform ordering of x and its neighbors
    return [Fraction(factorial(a) * factorial(deg - a), factorial(deg + 1)) for a in range(deg + 1)]


def _check_exact(G: SimpleGraph, x: int, max_degree: int) -> tuple[int, ...]:
    nbrs = G.neighbors(x)
    if len(nbrs) > max_degree:
        raise ValueError(
            f"degree {len(nbrs)} of vertex {x} exceeds the exact bound {max_degree}; "
            "use the monte-carlo mode"
        )
    return nbrs


def index_expectation(G: SimpleGraph, x: int, mode: str = "exact", *,
                      trials: int = 100_000, seed: int = 0,
                      max_degree: int = EXACT_DEGREE_LIMIT) -> Fraction | MonteCarloEstimate:
    """E[i_f(x)] over uniformly random orderings of the vertices.

    ``mode="exact"`` sums ``1 - chi(S(x)[A])`` over subsets A of the
    neighbors, each weighted by the probability that A is exactly the set of
    neighbors below x.  ``mode="monte-carlo"`` samples ``trials`` orderings.
    """
    if mode == "monte-carlo":
        return index_expectation_mc(G, x, trials, seed)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    nbrs = _check_exact(G, x, max_degree)
    w = _subset_weights(len(nbrs))
    total = Fraction(0)
    for bits in range(1 << len(nbrs)):
        mask = 0
        for i, y in enumerate(nbrs):
            if bits >> i & 1:
                mask |= 1 << y
        total += w[bits.bit_count()] * (1 - _chi_of_mask(G, mask))
    return total


def index_expectation_enumerated(G: SimpleGraph, x: int, max_degree: int = 6) -> Fraction:
    """E[i_f(x)] by listing every ordering of the closed neighborhood.

    Slow oracle for :func:`index_expectation`; only the relative order of x
    and its neighbors affects i_f(x).
    """
    nbrs = _check_exact(G, x, max_degree)
    ball = (x,) + nbrs
    rest = [v for v in G.vertices() if v not in ball]
    seen: dict[tuple[int, ...], int] = {}
    total = 0
    count = 0
    for perm in permutations(range(len(ball))):
        # orderings with the same below-set give the same index; evaluate each set once
        below = tuple(y for y, r in zip(nbrs, perm[1:]) if r < perm[0])
        if below not in seen:
            vals = [0] * G.n
            for v, r in zip(ball, perm):
                vals[v] = r
            for k, v in enumerate(rest):
                vals[v] = len(ball) + k
            seen[below] = index(G, VertexFunction(vals), x)
        total += seen[below]
        count += 1
    return Fraction(total, count)


def expected_sublevel_counts(G: SimpleGraph, x: int,
                             max_degree: int = EXACT_DEGREE_LIMIT) -> tuple[Fraction, ...]:
    """Exact E[V_k^-(x)] for k = 0, 1, ... under uniformly random orderings."""
    nbrs = _check_exact(G, x, max_degree)
    w = _subset_weights(len(nbrs))
    dims = len(clique_degrees(G, x))
    totals = [Fraction(0)] * dims
    for bits in range(1 << len(nbrs)):
        mask = 0
        for i, y in enumerate(nbrs):
            if bits >> i & 1:
                mask |= 1 << y
        for k, c in enumerate(_count_cliques(G._masks, mask)):
            totals[k] += w[bits.bit_count()] * c
    return tuple(totals)


def index_expectation_mc(G: SimpleGraph, x: int, trials: int, seed: int) -> MonteCarloEstimate:
    """Monte-Carlo estimate of E[i_f(x)] from ``trials`` random orderings.

    The stream for vertex ``x`` is seeded by ``(seed, x)`` so results do not
    depend on which other vertices are processed or in what order.
    """
    nbrs = G.neighbors(x)
    deg = len(nbrs)
    rng = np.random.default_rng([seed, x])
    keys = rng.random((trials, deg + 1))
    below = keys[:, 1:] < keys[:, :1]
    codes = below @ (1 << np.arange(deg, dtype=np.int64)) if deg else np.zeros(trials, np.int64)
    uniq, inverse = np.unique(codes, return_inverse=True)
    values = np.empty(len(uniq))
    for i, code in enumerate(uniq.tolist()):
        mask = 0
        for b, y in enumerate(nbrs):
            if code >> b & 1:
                mask |= 1 << y
        values[i] = 1 - _chi_of_mask(G, mask)
    samples = values[inverse]
    stderr = float(samples.std(ddof=1) / np.sqrt(trials)) if trials > 1 else float("inf")
    return MonteCarloEstimate(float(samples.mean()), stderr, trials, seed)
