import pytest
from hypothesis import given, settings, strategies as st

from conftest import colourings
from tools.constructions import construct_bg
from tools.errors import DomainError, InvariantBreach, ResourceLimitError
from tools.graph_core import ColouredCompleteGraph, verify_witness
from tools.oracle import adversarial_search, exact_M, exact_M_by_colour, search_objective
from tools.settings import Settings


def test_exact_m_on_bg13(bg13):
    value, witness = exact_M(bg13.colouring, 2, max_n=16)
    assert value == 11
    assert witness.order == 11
    assert verify_witness(bg13.colouring, witness)
    assert exact_M_by_colour(bg13.colouring, 2, max_n=16) == 11


def test_rainbow_k4(rainbow_k4):
    value, witness = exact_M(rainbow_k4, 1, max_n=16)
    assert value == 2
    assert witness.vertices == (0, 1)
    assert exact_M(rainbow_k4, 2, max_n=16) == (0, None)


def test_five_cycle(five_cycle):
    assert exact_M(five_cycle, 1, max_n=16)[0] == 5
    assert exact_M(five_cycle, 2, max_n=16)[0] == 5
    assert exact_M(five_cycle, 3, max_n=16)[0] == 0
    assert exact_M(five_cycle, 3, s=2, max_n=16)[0] == 5


@settings(max_examples=60, deadline=None)
@given(colourings(min_n=2, max_n=7, min_r=1, max_r=3), st.integers(1, 3), st.integers(1, 2))
def test_two_oracles_agree(F, k, s):
    value, witness = exact_M(F, k, s, max_n=16)
    assert value == exact_M_by_colour(F, k, s, max_n=16)
    if value:
        assert witness.order == value and len(witness.colours) <= s
        assert verify_witness(F, witness)
    else:
        assert witness is None


@settings(max_examples=40, deadline=None)
@given(colourings(min_n=3, max_n=8, min_r=2, max_r=3))
def test_monotone_in_k_and_s(F):
    by_k = [exact_M(F, k, max_n=16)[0] for k in (1, 2, 3)]
    assert by_k == sorted(by_k, reverse=True)
    assert exact_M(F, 2, s=1, max_n=16)[0] <= exact_M(F, 2, s=2, max_n=16)[0]


def test_refuses_large_colourings():
    F = construct_bg(30, 2).colouring
    with pytest.raises(ResourceLimitError):
        exact_M(F, 2, max_n=16)
    with pytest.raises(ResourceLimitError):
        exact_M_by_colour(F, 2, max_n=16)


def test_colour_restricted_mode():
    F = construct_bg(20, 2).colouring
    assert exact_M(F, 2, max_n=16, colour_restricted=True, max_component=20)[0] == 18
    with pytest.raises(ResourceLimitError, match="component"):
        exact_M(F, 2, max_n=16, colour_restricted=True, max_component=10)


def test_levels_are_checked(five_cycle):
    with pytest.raises(DomainError):
        exact_M(five_cycle, 0, max_n=16)
    with pytest.raises(DomainError):
        exact_M(five_cycle, 1, s=0, max_n=16)


def test_search_objective_choice():
    config = Settings()
    assert search_objective(9, 2, 3, 1, config)[:2] == ("exact_M", True)
    assert search_objective(20, 2, 1, 1, config)[:2] == ("surrogate:r11", False)
    assert search_objective(40, 2, 3, 1, config)[:2] == ("surrogate:thm21k", False)
    with pytest.raises(ResourceLimitError):
        search_objective(20, 2, 3, 2, config)


def test_search_never_beats_bg_9_3():
    start = construct_bg(9, 3).colouring
    state = adversarial_search(9, 2, 3, 1, iterations=40, seed=3, start=start, settings=Settings())
    assert state.exact
    assert state.archive[0].value == 5
    assert state.value == 5


def test_search_is_reproducible():
    first = adversarial_search(6, 2, 2, 1, iterations=60, seed=7, settings=Settings())
    second = adversarial_search(6, 2, 2, 1, iterations=60, seed=7, settings=Settings())
    assert first.archive == second.archive
    assert first.colouring == second.colouring
    assert [entry.value for entry in first.archive] == sorted((e.value for e in first.archive), reverse=True)


def test_search_with_surrogate_objective():
    state = adversarial_search(20, 3, 1, 1, iterations=15, seed=0, settings=Settings())
    assert state.objective == "surrogate:r11"
    assert not state.exact
    assert state.value >= 10


def test_search_rejects_mismatched_start(bg13):
    with pytest.raises(DomainError):
        adversarial_search(12, 2, 2, 1, iterations=1, seed=0, start=bg13.colouring, settings=Settings())


def test_single_colour_search_has_nothing_to_move():
    state = adversarial_search(5, 1, 1, 1, iterations=10, seed=0, settings=Settings())
    assert state.value == 5
    assert state.colouring == ColouredCompleteGraph.monochromatic(5)


def test_search_below_the_proven_lower_bound_fails(monkeypatch):
    monkeypatch.setattr("tools.oracle.search_objective", lambda n, r, k, s, config: ("exact_M", True, lambda F: 4))
    with pytest.raises(InvariantBreach, match="below proven lower bound 5"):
        adversarial_search(9, 2, 3, 1, iterations=5, seed=0, settings=Settings())


def test_search_at_the_proven_lower_bound_passes(monkeypatch):
    monkeypatch.setattr("tools.oracle.search_objective", lambda n, r, k, s, config: ("exact_M", True, lambda F: 5))
    assert adversarial_search(9, 2, 3, 1, iterations=5, seed=0, settings=Settings()).value == 5
