import os

from hypothesis import settings, strategies as st

from necksplit.generator import color_names
from necksplit.necklace import Necklace
from necksplit.walkgraph import Multigraph

settings.register_profile("default", deadline=None, max_examples=150)
settings.register_profile("ci", deadline=None, max_examples=400, derandomize=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def necklaces(draw, min_colors=1, max_colors=6, max_pts=5):
    n = draw(st.integers(min_colors, max_colors))
    sizes = draw(st.lists(st.sampled_from(range(1, max_pts + 1, 2)), min_size=n, max_size=n))
    slots = [c for c, k in zip(color_names(n), sizes) for _ in range(k)]
    order = draw(st.permutations(slots))
    colors = {}
    for i, c in enumerate(order):
        colors.setdefault(c, []).append(i)
    return Necklace(colors)


@st.composite
def multigraphs(draw, min_vertices=1, max_vertices=8, max_mult=3, connected=True):
    n = draw(st.integers(min_vertices, max_vertices))
    edges = {}
    if connected:
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges[(u, v)] = draw(st.integers(1, max_mult))
    if n > 1:
        extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
        for u, v in extra:
            if u != v:
                key = (min(u, v), max(u, v))
                edges[key] = min(max_mult, edges.get(key, 0) + 1)
    return Multigraph(range(n), edges)
