import pytest
from hypothesis import settings, strategies as st

from fchromatic import _pure
from fchromatic.graph import ColorBudget, build_graph

try:
    from fchromatic import _kernels
except ImportError:  # extension not built
    _kernels = None

# brute-force oracles make example timings uneven; correctness, not speed, is tested here
settings.register_profile("default", deadline=None)
settings.load_profile("default")

C1, C2, C3 = 0, 1, 2


@pytest.fixture
def het_k22():
    """K_{2,2} on parts {0,1}, {2,3}: c1 twice, c2 and c3 once."""
    return build_graph(4, [(0, 2, C1), (0, 3, C1), (1, 2, C2), (1, 3, C3)], {C1, C2, C3},
                       names={C1: "c1", C2: "c2", C3: "c3"})


@pytest.fixture
def mono_k22():
    return build_graph(4, [(0, 2, C1), (0, 3, C1), (1, 2, C1), (1, 3, C1)], {C1}, names={C1: "c1"})


@pytest.fixture
def ones():
    return lambda G: ColorBudget.uniform(G.colors, 1)


BACKENDS = [pytest.param(_pure, id="pure"),
            pytest.param(_kernels, id="compiled",
                         marks=pytest.mark.skipif(_kernels is None, reason="extension not built"))]


@st.composite
def colored_graphs(draw, max_vertices=7, max_colors=4, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    k = draw(st.integers(1, max_colors))
    colors = [draw(st.integers(0, k - 1)) for _ in chosen]
    return build_graph(n, [(a, b, c) for (a, b), c in zip(chosen, colors)], range(k))


@st.composite
def instances(draw, max_vertices=7, max_colors=4, max_cap=3):
    G = draw(colored_graphs(max_vertices, max_colors))
    f = ColorBudget({c: draw(st.integers(0, max_cap)) for c in G.colors})
    w = draw(st.integers(1, G.vertex_count))
    return G, f, w
