"""
Shared fixtures and Hypothesis strategies for the MONOCLE test suite
"""

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from tools.constructions import construct_affine, construct_bg
from tools.graph_core import ColouredCompleteGraph


@st.composite
def colourings(draw, min_n=2, max_n=7, min_r=1, max_r=3):
    """Arbitrary r-colourings of K_n, drawn edge by edge"""
    n = draw(st.integers(min_n, max_n))
    r = draw(st.integers(min_r, max_r))
    colours = draw(st.lists(st.integers(1, r), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return ColouredCompleteGraph.from_edges(n, r, [(u, v, c) for (u, v), c in zip(pairs, colours)])


@st.composite
def graphs(draw, min_n=2, max_n=9):
    """Simple graphs on 0..n-1"""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(pair for pair, on in zip(pairs, keep) if on)
    return G


@pytest.fixture
def bg13():
    return construct_bg(13, 2)


@pytest.fixture
def affine16():
    return construct_affine(16, 3, 1)


@pytest.fixture
def five_cycle():
    """K_5 with colour 1 on the cycle 0-1-2-3-4 and colour 2 on the pentagram"""
    return ColouredCompleteGraph.from_function(5, 2, lambda u, v: 1 if (v - u) % 5 in (1, 4) else 2)


@pytest.fixture
def rainbow_k4():
    pairs = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    return ColouredCompleteGraph.from_edges(4, 6, [(u, v, c) for c, (u, v) in enumerate(pairs, start=1)])


@pytest.fixture
def rng():
    return np.random.default_rng(2024)
