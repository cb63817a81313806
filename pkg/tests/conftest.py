import itertools

import pytest
from hypothesis import strategies as st

from fpoly import generators as gen
from fpoly.graph_core import build_graph


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


def naive_cliques(G):
    """Every nonempty clique by checking all vertex subsets (tiny graphs only)."""
    out = []
    verts = list(G.vertices)
    for k in range(1, len(verts) + 1):
        found = False
        for combo in itertools.combinations(verts, k):
            if all(G.has_edge(a, b) for a, b in itertools.combinations(combo, 2)):
                out.append(frozenset(combo))
                found = True
        if not found:
            break
    return out


def naive_f_vector(G):
    counts = {}
    for c in naive_cliques(G):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return tuple(counts[k] for k in sorted(counts))


def naive_f_matrix(G, H):
    xs, ys = naive_cliques(G), naive_cliques(H)
    out = {}
    for x in xs:
        for y in ys:
            if x & y:
                key = (len(x) - 1, len(y) - 1)
                out[key] = out.get(key, 0) + 1
    return out


def fixture_graphs():
    """Named small graphs shared by several test modules."""
    octahedron = gen.join(gen.cycle(4), build_graph(2, []))
    graphs = {
        "K1": gen.complete(1),
        "K2": gen.complete(2),
        "K3": gen.complete(3),
        "K4": gen.complete(4),
        "K5": gen.complete(5),
        "C4": gen.cycle(4),
        "C5": gen.cycle(5),
        "C7": gen.cycle(7),
        "P4": gen.path(4),
        "star5": gen.star(5),
        "W4": gen.wheel(4),
        "W5": gen.wheel(5),
        "octahedron": octahedron,
        "two_points": build_graph(2, []),
        "bowtie": build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
        "torus16": gen.torus_16(),
        "bary_K3": gen.barycentric(gen.complete(3))[0],
        "er7": gen.erdos_renyi(7, 0.5, 11),
        "er10": gen.erdos_renyi(10, 0.6, 3),
    }
    return graphs


FIXTURES = fixture_graphs()


@pytest.fixture(params=sorted(FIXTURES))
def fixture_graph(request):
    return FIXTURES[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: (int(k.rstrip("ab")), k)):
        status, text = results[key]
        terminalreporter.write_line(f"{status}  criterion {key}: {text}")
