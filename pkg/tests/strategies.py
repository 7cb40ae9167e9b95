"""Hypothesis strategies for connected graphs and intersection models."""

from hypothesis import strategies as st

from pathlength.graph import build_graph


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    labels = draw(st.permutations(range(n)))
    return build_graph([(labels[u], labels[v]) for u, v in edges | set(extra)], n)


@st.composite
def permutation_models(draw, min_n=2, max_n=12):
    """Permutations whose graph is connected (no proper prefix maps onto itself)."""
    n = draw(st.integers(min_n, max_n))
    return _connect(draw(st.permutations(range(1, n + 1))))


def _connect(perm):
    """Swap the two entries around each prefix cut; every swap removes one cut."""
    perm = list(perm)
    changed = True
    while changed:
        changed = False
        running = 0
        for i in range(1, len(perm)):
            running = max(running, perm[i - 1])
            if running == i:
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
                changed = True
                break
    return perm


@st.composite
def trapezoid_models(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    span = 2 * n
    corner = st.integers(1, span)
    model = []
    for _ in range(n):
        a, b = sorted(draw(st.tuples(corner, corner)))
        c, d = sorted(draw(st.tuples(corner, corner)))
        model.append((a, b, c, d))
    return model


@st.composite
def convex_bipartite_models(draw, max_u=6, max_v=6):
    q = draw(st.integers(1, max_u))
    p = draw(st.integers(1, max_v))
    intervals = []
    for _ in range(p):
        l = draw(st.integers(1, q))
        intervals.append((l, draw(st.integers(l, q))))
    return q, intervals
