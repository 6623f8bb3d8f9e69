import random

import pytest
from hypothesis import given, settings, strategies as st

from skewq.errors import BudgetExceeded, InputError
from skewq.graphcalc import (
    Graph,
    apply_ops,
    canonical_form,
    canonicalize,
    classify_by_mutation,
    delta_and_invariants,
    graph_from_sign_matrix,
    invariants_of_graph,
    is_isomorphic,
    is_matching_form,
    mutation,
    nullity,
    relative_mutation,
    sign_matrix_from_graph,
    two_points_reduction,
)
from skewq.skewpoly import SignMatrix


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_code(n, code)


def test_parse_roundtrip():
    g = Graph.parse("n=4; edges=1-2,3-4")
    assert g.to_text() == "n=4; edges=1-2,3-4"
    assert Graph.parse(g.to_text()) == g
    with pytest.raises(InputError):
        Graph.parse("n=3; edges=1-4")


def test_invariants_examples():
    qs1 = invariants_of_graph(Graph.complete(4))
    assert (qs1.r, qs1.alpha, qs1.beta, qs1.seq_length) == (1, 2, 2, 4)
    k3 = invariants_of_graph(Graph.complete(3))
    assert (k3.r, k3.alpha, k3.beta, k3.seq_length) == (0, 1, 2, 2)
    e3 = invariants_of_graph(Graph.empty(3))
    assert (e3.r, e3.alpha, e3.beta, e3.seq_length) == (2, 4, 1, 5)


def test_sign_matrix_graph_roundtrip():
    eps = SignMatrix.from_upper(4, [[-1, -1, 1], [-1, -1], [-1]])
    g = graph_from_sign_matrix(eps)
    assert g.edges() == [(0, 3)]
    assert sign_matrix_from_graph(g) == eps
    assert delta_and_invariants(eps).r == 1


@given(graphs())
@settings(max_examples=80, deadline=None)
def test_parity_and_mutation(g):
    r = nullity(g)
    assert r % 2 == (g.n - 1) % 2
    for v in range(g.n):
        m = mutation(g, v)
        assert nullity(m) == r
        assert mutation(m, v) == g


@given(graphs(), st.data())
@settings(max_examples=60, deadline=None)
def test_canonical_form_is_label_free(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert is_isomorphic(g, h)


def test_non_isomorphic():
    assert not is_isomorphic(Graph.parse("n=4; edges=1-2,2-3"), Graph.parse("n=4; edges=1-2,3-4"))


def test_relative_mutation_needs_isolated_vertex():
    g = Graph.complete(3)
    with pytest.raises(InputError):
        relative_mutation(g, 0, 1)
    g = Graph.parse("n=4; edges=1-2,2-3")
    h = relative_mutation(g, 0, 2)
    assert h.neighbors(2) == g.neighbors(0) ^ g.neighbors(2)
    assert nullity(h) == nullity(g)


def test_two_points_reduction():
    g = Graph.parse("n=5; edges=1-2")
    h = two_points_reduction(g)
    assert h.n == 4 and nullity(h) == nullity(g) - 1
    with pytest.raises(InputError):
        two_points_reduction(Graph.complete(3))


@pytest.mark.parametrize("seed", range(6))
def test_canonicalize_ops_replay(seed):
    r = random.Random(seed)
    n = r.randint(2, 6)
    g = Graph.from_code(n, r.getrandbits(n * (n - 1) // 2))
    res = canonicalize(g)
    assert is_matching_form(res.graph, nullity(g))
    assert apply_ops(g, res.ops) == res.graph


def test_budget(monkeypatch):
    g = Graph.parse("n=6; edges=1-2,2-3,3-4,4-5")
    with pytest.raises(BudgetExceeded):
        canonicalize(g, budget=1)
    monkeypatch.setenv("SKEWQ_BUDGET", "1")
    with pytest.raises(BudgetExceeded):
        canonicalize(g)


def test_classify_small():
    assert len(classify_by_mutation(1)) == 1
    classes = classify_by_mutation(3)
    assert sorted(c.r for c in classes) == [0, 2]
    assert sum(c.size for c in classes) == 8
    with pytest.raises(BudgetExceeded):
        classify_by_mutation(6)
