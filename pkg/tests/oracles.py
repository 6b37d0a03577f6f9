"""Slow, independent reference computations used only by the tests.

Nothing here shares code with the bitmask kernels in ``curvgraph.graph``:
cliques come from checking every vertex subset, Euler characteristics from
those subsets, and isomorphism from networkx.
"""

from fractions import Fraction
from itertools import combinations

import networkx as nx


def all_cliques(G):
    out = []
    for size in range(1, G.n + 1):
        level = [
            sub for sub in combinations(range(G.n), size)
            if all(G.has_edge(a, b) for a, b in combinations(sub, 2))
        ]
        if not level:
            break
        out.extend(level)
    return out


def f_vector(G):
    counts = {}
    for c in all_cliques(G):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return tuple(counts[k] for k in sorted(counts))


def chi_of_set(G, vertices):
    vs = sorted(vertices)
    chi = 0
    for size in range(1, len(vs) + 1):
        for sub in combinations(vs, size):
            if all(G.has_edge(a, b) for a, b in combinations(sub, 2)):
                chi += (-1) ** (size - 1)
    return chi


def chi(G):
    return chi_of_set(G, range(G.n))


def index(G, f, x):
    return 1 - chi_of_set(G, [y for y in G.neighbors(x) if f[y] < f[x]])


def curvature(G, x):
    V = f_vector_of_set(G, G.neighbors(x))
    return Fraction(1) + sum(Fraction((-1) ** (k + 1) * c, k + 2) for k, c in enumerate(V))


def f_vector_of_set(G, vertices):
    vs = sorted(vertices)
    counts = []
    for size in range(1, len(vs) + 1):
        c = sum(1 for sub in combinations(vs, size)
                if all(G.has_edge(a, b) for a, b in combinations(sub, 2)))
        if not c:
            break
        counts.append(c)
    return counts


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def isomorphic(G, H):
    return nx.is_isomorphic(to_nx(G), to_nx(H))
