from __future__ import annotations

from itertools import combinations

from hypothesis import settings
from hypothesis import strategies as st

from pubgoods.core import Graph, Pattern

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

bits = st.integers(min_value=0, max_value=1)


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def patterns(draw, max_prefix=5, max_tail=3):
    prefix = draw(st.lists(bits, max_size=max_prefix))
    tail = draw(st.lists(bits, min_size=1, max_size=max_tail))
    return Pattern(tuple(prefix), tuple(tail))


@st.composite
def graph_and_profile(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    prof = tuple(draw(st.lists(bits, min_size=g.n, max_size=g.n)))
    return g, prof
