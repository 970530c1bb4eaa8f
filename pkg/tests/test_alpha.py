import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import alpha_bitmask_enumeration, alpha_brute, random_graph
from stitchlab.alpha import (
    alpha,
    alpha_at_most,
    count_maximum_independent_sets,
    has_independent_set,
    independence_number,
)
from stitchlab.families import bicycle, chain, cycle, petersen, w13
from stitchlab.graph import Graph, is_independent


@pytest.mark.parametrize("seed", range(200))
def test_matches_subset_enumeration(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(0, 16), rng.choice([0.1, 0.25, 0.5, 0.75]))
    res = independence_number(g)
    assert res.alpha == alpha_bitmask_enumeration(g)
    assert len(res.witness) == res.alpha and is_independent(g, res.witness)


def test_known_values():
    assert alpha(petersen()) == 4
    assert alpha(w13()) == 4
    assert alpha(cycle(5)) == 2
    assert alpha(Graph(0)) == 0
    assert alpha(Graph(7)) == 7


def test_maximum_set_counts():
    # counted once by exhaustive enumeration and frozen here
    assert count_maximum_independent_sets(w13()) == 39
    assert count_maximum_independent_sets(Graph(0)) == 1
    assert count_maximum_independent_sets(cycle(5)) == 5


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_disjoint_sum_is_additive(seed):
    rng = random.Random(seed)
    a, b = random_graph(rng, 6, 0.4), random_graph(rng, 7, 0.3)
    assert alpha(a + b) == alpha(a) + alpha(b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_edge_removal_is_monotone(seed):
    rng = random.Random(seed)
    g = random_graph(rng, 9, 0.5)
    for u, v in g.edges():
        assert alpha(g) <= alpha(g.without_edge(u, v)) <= alpha(g) + 1


@pytest.mark.parametrize("seed", range(30))
def test_decision_variants(seed):
    rng = random.Random(seed)
    g = random_graph(rng, 10, 0.4)
    a = alpha_brute(g)
    full = (1 << g.n) - 1
    assert has_independent_set(g.adj, full, a)
    assert not has_independent_set(g.adj, full, a + 1)
    assert alpha_at_most(g, a) and not alpha_at_most(g, a - 1)


def test_alpha_at_most_rejects_negative():
    with pytest.raises(ValueError):
        alpha_at_most(cycle(5), -1)


def test_family_values():
    for k in range(2, 8):
        assert alpha(chain(k)) == k
    for k in range(4, 8):
        assert alpha(bicycle(k)) == k
