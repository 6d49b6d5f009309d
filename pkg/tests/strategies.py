# -*- coding: utf-8 -*-
from hypothesis import strategies as st

from core.graph import BipartiteGraph


@st.composite
def bipartite_graphs(draw, max_k=5, max_m=5):
    k = draw(st.integers(min_value=0, max_value=max_k))
    m = draw(st.integers(min_value=0, max_value=max_m))
    pairs = [(x, y) for x in range(1, k + 1) for y in range(1, m + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return BipartiteGraph(k, m, chosen)


def degree_vectors(max_len=6, max_value=6):
    return st.lists(st.integers(min_value=0, max_value=max_value), min_size=0, max_size=max_len)
