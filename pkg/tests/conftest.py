import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from curvgraph import SimpleGraph  # noqa: E402
from curvgraph import generators as gen  # noqa: E402
from curvgraph.geometry import graph_product, stellate_cycles, suspension  # noqa: E402


def named_generators():
    """Every generator family at a few parameter values, plus derived constructions."""
    return {
        "C5": gen.cyclic(5),
        "C8": gen.cyclic(8),
        "K1": gen.complete(1),
        "K5": gen.complete(5),
        "P4": gen.path(4),
        "W4": gen.wheel(4),
        "W7": gen.wheel(7),
        "cross1": gen.cross_polytope(1),
        "octahedron": gen.octahedron(),
        "cross3": gen.cross_polytope(3),
        "cross4": gen.cross_polytope(4),
        "icosahedron": gen.icosahedron(),
        "dodecahedron": gen.dodecahedron(),
        "cube": gen.cube(),
        "stellated-cube": stellate_cycles(gen.cube(), 4),
        "stellated-dodecahedron": stellate_cycles(gen.dodecahedron(), 5),
        "susp-icosahedron": suspension(gen.icosahedron()),
        "prism": graph_product(gen.complete(2), gen.complete(3)),
        "C4xC4": graph_product(gen.cyclic(4), gen.cyclic(4)),
        "er-15-0.4": gen.erdos_renyi(15, 0.4, 3),
    }


@pytest.fixture(scope="session")
def generator_corpus():
    return named_generators()


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return SimpleGraph(n, chosen)


@st.composite
def graphs_with_functions(draw, max_n=9):
    G = draw(small_graphs(max_n=max_n))
    ranks = draw(st.permutations(list(range(G.n))))
    return G, ranks


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
