import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import colourings
from tools.constructions import construct_affine, construct_bg
from tools.errors import DomainError, InvariantBreach, PreconditionError
from tools.extract_general import (
    extract_bip_component,
    extract_mader,
    extract_mader_coloured,
    extract_r11,
    extract_r1kbip,
    extract_r1kbip_coloured,
    extract_thm_r1k,
    r1k_guarantee,
    sharpest_q,
    split_gap,
    turan_bound,
)
from tools.extract_three import extract_31kbip, extract_thm31k, thm31k_guarantee
from tools.extract_two import extract_degs, extract_thm21k, thm21k_threshold
from tools.graph_core import ColouredBipartiteGraph, ColouredCompleteGraph, is_k_connected, verify_witness
from tools.oracle import exact_M


def assert_sound(F, report):
    assert report.witness.order >= report.guarantee
    assert verify_witness(F, report.witness)


# Two colours

def test_degs_on_a_red_clique():
    F = ColouredCompleteGraph.monochromatic(10, r=2, colour=1)
    report = extract_degs(F, 3)
    assert report.witness.order == 10
    assert report.trace[0].detail["branch"] == "primary"


def test_degs_uses_the_other_colour_across_a_red_cut():
    # two red K_5 joined by blue
    F = ColouredCompleteGraph.from_function(10, 2, lambda u, v: 1 if u // 5 == v // 5 else 2)
    report = extract_degs(F, 3)
    assert_sound(F, report)
    assert report.witness.colours == (2,)
    assert report.witness.order == 10


def test_degs_names_the_low_degree_vertex():
    F = ColouredCompleteGraph.monochromatic(10, r=2, colour=2)
    with pytest.raises(PreconditionError, match="at vertex 0"):
        extract_degs(F, 2)


def test_thm21k_on_bg_40_4():
    F = construct_bg(40, 4).colouring
    report = extract_thm21k(F, 4)
    assert_sound(F, report)
    assert report.witness.order >= 34
    assert "peel" in [step.step for step in report.trace]


@pytest.mark.parametrize("seed", range(5))
def test_thm21k_on_random_colourings(seed):
    F = ColouredCompleteGraph.random(50, 2, seed)
    report = extract_thm21k(F, 5)
    assert_sound(F, report)
    assert report.witness.order >= 42


@pytest.mark.parametrize("n, k", [(13, 2), (24, 3), (37, 4)])
def test_thm21k_reaches_the_bg_maximum(n, k):
    F = construct_bg(n, k).colouring
    report = extract_thm21k(F, k)
    assert_sound(F, report)
    assert report.witness.order == n - 2 * k + 2


def test_thm21k_sandwich_against_oracle(bg13):
    F = bg13.colouring
    report = extract_thm21k(F, 2)
    assert report.witness.order <= exact_M(F, 2, max_n=16)[0] <= bg13.claimed_bound


def test_thm21k_preconditions():
    with pytest.raises(PreconditionError, match="13k−15"):
        extract_thm21k(construct_bg(30, 4).colouring, 4)
    with pytest.raises(PreconditionError, match="r = 2"):
        extract_thm21k(construct_affine(16, 3, 1).colouring, 1)


def test_thm21k_thresholds():
    assert thm21k_threshold(5) == (50, "n ⩾ 13k−15")
    assert thm21k_threshold(5, "remark") == (50, "n ⩾ 13k−15")
    assert thm21k_threshold(18, "remark") == (219, "n ⩾ (9+√10)k")


def test_thm21k_checks_the_peeled_sides_under_either_threshold(monkeypatch):
    F = construct_bg(219, 18).colouring
    monkeypatch.setattr("tools.extract_two.peel_low_degree", lambda G, threshold: list(range(8 * 18 - 10)))
    for threshold in ("theorem", "remark"):
        with pytest.raises(InvariantBreach, match="both exceed 8k−11"):
            extract_thm21k(F, 18, threshold=threshold)


# Mader and bipartite pieces

def test_mader_on_k5():
    H = extract_mader(nx.complete_graph(5), 1)
    assert H.number_of_nodes() == 5


def test_mader_picks_one_clique():
    G = nx.disjoint_union(nx.complete_graph(13), nx.complete_graph(13))
    H = extract_mader(G, 3)
    assert H.number_of_nodes() == 13
    assert is_k_connected(H, 3)[0]


@pytest.mark.parametrize("seed", range(10))
def test_mader_on_dense_random_graphs(seed):
    G = nx.gnp_random_graph(80, 0.4, seed=seed)
    if 2 * G.number_of_edges() < 12 * 80:
        pytest.skip("sample below average degree 4k")
    H = extract_mader(G, 3)
    assert is_k_connected(H, 3)[0]
    assert set(H) <= set(G)


def test_mader_precondition():
    with pytest.raises(PreconditionError, match="average degree"):
        extract_mader(nx.cycle_graph(10), 1)
    with pytest.raises(DomainError):
        extract_mader(nx.complete_graph(5), 0)


def test_mader_coloured_guarantee():
    report = extract_mader_coloured(ColouredCompleteGraph.monochromatic(9), 2)
    assert report.guarantee == 3
    assert report.witness.order == 9


def test_bip_component_on_complete_bipartite():
    B = nx.complete_bipartite_graph(4, 6)
    H = extract_bip_component(B, range(4), range(4, 10))
    assert H.number_of_nodes() == 10


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.lists(st.booleans(), min_size=36, max_size=36))
def test_bip_component_density_bound(m, n, bits):
    B = nx.Graph()
    B.add_nodes_from(range(m + n))
    B.add_edges_from((x, m + y) for x in range(m) for y in range(n) if bits[x * 6 + y])
    e = B.number_of_edges()
    if e == 0:
        with pytest.raises(DomainError):
            extract_bip_component(B, range(m), range(m, m + n))
        return
    H = extract_bip_component(B, range(m), range(m, m + n))
    assert H.number_of_nodes() * m * n >= e * (m + n)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 40), st.integers(0, 40), st.integers(1, 40), st.integers(1, 40))
def test_split_gap_is_never_negative(a, b, c, d):
    if a + b == 0:
        a = 1
    assert split_gap(a, b, c, d) >= 0


def complete_bipartite_colouring(m, n):
    return ColouredBipartiteGraph.standard(m, n, 2, np.ones((m, n), dtype=int))


def test_r1kbip_on_complete_bipartite():
    FB = complete_bipartite_colouring(10, 10)
    assert turan_bound(10, 10, 1, 14) < 100 <= turan_bound(10, 10, 1, 15)
    assert sharpest_q(10, 10, 1, 100) == 14
    report = extract_r1kbip_coloured(FB, 1, 14)
    assert report.witness.order == 20
    assert report.witness.k == 2


def test_r1kbip_refuses_at_the_bound():
    FB = complete_bipartite_colouring(10, 10)
    outcome = extract_r1kbip(FB.colour_graph(1), FB.left, FB.right, 1, 15)
    assert outcome.refused
    with pytest.raises(PreconditionError):
        extract_r1kbip_coloured(FB, 1, 15)


def test_r1kbip_splits_two_dense_blocks():
    # two disjoint K_{12,12} blocks on a 24 + 24 bipartite host
    matrix = np.full((24, 24), 2, dtype=int)
    matrix[:12, :12] = 1
    matrix[12:, 12:] = 1
    FB = ColouredBipartiteGraph.standard(24, 24, 2, matrix)
    outcome = extract_r1kbip(FB.colour_graph(1), FB.left, FB.right, 1, 3)
    assert not outcome.refused
    assert outcome.depth >= 1
    assert is_k_connected(outcome.subgraph, 2)[0]
    assert outcome.subgraph.number_of_nodes() >= 3


# r colours

@settings(max_examples=40, deadline=None)
@given(colourings(min_n=2, max_n=12, min_r=1, max_r=4))
def test_r11_meets_n_over_r_minus_one(F):
    report = extract_r11(F)
    assert_sound(F, report)


def test_r11_on_affine_is_tight(affine16):
    report = extract_r11(affine16.colouring)
    assert report.guarantee == 8
    assert report.witness.order == 8


def test_thm_r1k_with_k_one_uses_components(affine16):
    report = extract_thm_r1k(affine16.colouring, 1)
    assert report.method == "thm_r1k"
    assert report.witness.order == 8


def test_thm_r1k_preconditions(bg13):
    with pytest.raises(PreconditionError, match="r ⩾ 3"):
        extract_thm_r1k(bg13.colouring, 2)
    with pytest.raises(PreconditionError, match="11"):
        extract_thm_r1k(ColouredCompleteGraph.random(40, 3, 0), 2)


@pytest.mark.slow
def test_thm_r1k_on_a_random_colouring():
    F = ColouredCompleteGraph.random(140, 3, 11)
    report = extract_thm_r1k(F, 2)
    assert_sound(F, report)
    assert report.guarantee == r1k_guarantee(140, 3, 2)[0]


# Three colours

def test_31kbip_keeps_dense_main_colour():
    FB = ColouredBipartiteGraph.standard(24, 30, 3, np.ones((24, 30), dtype=int))
    report = extract_31kbip(FB, 1)
    assert report.guarantee == 24 + 30 - 24
    assert report.witness.order == 54


def test_31kbip_preconditions():
    with pytest.raises(PreconditionError, match="24k"):
        extract_31kbip(ColouredBipartiteGraph.standard(10, 10, 3, np.ones((10, 10), dtype=int)), 1)
    matrix = np.ones((24, 24), dtype=int)
    matrix[5, :2] = 3
    with pytest.raises(PreconditionError, match="at vertex 5"):
        extract_31kbip(ColouredBipartiteGraph.standard(24, 24, 3, matrix), 1)


def test_thm31k_guarantee_by_residue():
    assert thm31k_guarantee(961, 2) == 481
    assert thm31k_guarantee(480, 1) == 240
    assert thm31k_guarantee(962, 2) == 481
    assert thm31k_guarantee(961, 2, refine=False) == 480


def test_thm31k_needs_480k():
    F = construct_affine(479, 3, 1).colouring
    with pytest.raises(PreconditionError, match="n ⩾ 480k violated"):
        extract_thm31k(F, 1)


@pytest.mark.slow
def test_thm31k_on_affine_is_tight():
    F = construct_affine(480, 3, 1).colouring
    report = extract_thm31k(F, 1)
    assert_sound(F, report)
    assert report.witness.order == 240


@pytest.mark.slow
def test_thm31k_on_a_random_colouring():
    F = ColouredCompleteGraph.random(480, 3, 5)
    report = extract_thm31k(F, 1)
    assert_sound(F, report)


def bipartite_sample(p, seed):
    return nx.bipartite.random_graph(40, 40, p, seed=seed), range(40), range(40, 80)


@pytest.mark.parametrize("seed", range(10))
def test_r1kbip_above_the_edge_bound(seed):
    B, M, N = bipartite_sample(0.7, seed)
    assert B.number_of_edges() > turan_bound(40, 40, 2, 20) == 836
    outcome = extract_r1kbip(B, M, N, 2, 20)
    assert outcome.subgraph.number_of_nodes() >= 20
    assert is_k_connected(outcome.subgraph, 3)[0]
    assert set(outcome.subgraph.edges) <= set(B.edges) | {(v, u) for u, v in B.edges}


@pytest.mark.parametrize("seed", range(10))
def test_r1kbip_below_the_edge_bound(seed):
    B, M, N = bipartite_sample(0.4, seed)
    assert B.number_of_edges() <= 836
    assert extract_r1kbip(B, M, N, 2, 20).refused


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(5))
def test_thm_r1k_on_n_200(seed):
    F = ColouredCompleteGraph.random(200, 3, seed)
    report = extract_thm_r1k(F, 2)
    assert_sound(F, report)
    assert report.guarantee == 34
