import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lions.engine import simulate
from lions.errors import DomainError
from lions.graph import Graph, complete_binary_tree, components, cycle_graph, path_graph, star
from lions.search import lion_number
from lions.trees import directed_subtree_values, tree_clearing_strategy, tree_lion_number, tree_pathwidth
from lions.width import pathwidth_exact

from conftest import trees


def brute_values(t, fn):
    """Value of every component of T - v, recomputed from scratch."""
    out = {}
    for v in range(t.n):
        for comp in components(t, set(range(t.n)) - {v}):
            sub, old = induced(t, comp)
            x = next(x for x in t.adjacency[v] if x in comp)
            out[(x, v)] = fn(sub)
    return out


def induced(t, comp):
    from lions.graph import induced_subgraph
    return induced_subgraph(t, comp)


def test_small_values():
    assert tree_lion_number(Graph.from_edges(1, [])).value == 1
    assert tree_pathwidth(Graph.from_edges(1, [])).value == 0
    for n in range(2, 9):
        assert tree_lion_number(path_graph(n)).value == 1
        assert tree_pathwidth(path_graph(n)).value == 1
    assert tree_lion_number(star(3)).value == 2


@pytest.mark.parametrize("h, lions, width", [
    (0, 1, 0), (1, 1, 1), (2, 2, 1), (3, 2, 2), (4, 3, 2), (5, 3, 3), (6, 4, 3), (7, 4, 4), (8, 5, 4),
])
def test_complete_binary_trees(h, lions, width):
    t = complete_binary_tree(h)
    assert tree_lion_number(t).value == lions
    assert tree_pathwidth(t).value == width == math.ceil(h / 2)


def test_both_tightness_extremes_occur():
    gaps = {tree_lion_number(complete_binary_tree(h)).value - tree_pathwidth(complete_binary_tree(h)).value
            for h in range(1, 7)}
    assert gaps == {0, 1}


def test_non_tree_rejected():
    with pytest.raises(DomainError):
        tree_lion_number(cycle_graph(4))
    with pytest.raises(DomainError):
        tree_clearing_strategy(Graph.from_edges(2, []))


def certificate_holds(t, cert, fn):
    if cert.witness_vertex is None:
        return cert.value <= 1
    v = cert.witness_vertex
    heavy = [c for c in components(t, set(range(t.n)) - {v}) if fn(induced(t, c)[0]) >= cert.value - 1]
    return len(heavy) >= 3


@settings(max_examples=80)
@given(trees(max_n=11))
def test_recursion_matches_oracles(t):
    lc, pc = tree_lion_number(t), tree_pathwidth(t)
    assert lc.value == lion_number(t).value
    assert pc.value == max(pathwidth_exact(t)[0], 0)
    assert pc.value <= lc.value <= pc.value + 1
    assert certificate_holds(t, lc, lambda s: tree_lion_number(s).value)
    assert certificate_holds(t, pc, lambda s: tree_pathwidth(s).value)


@settings(max_examples=40)
@given(trees(min_n=2, max_n=14))
def test_directed_values(t):
    for mode, fn in (("lion", tree_lion_number), ("pathwidth", tree_pathwidth)):
        assert directed_subtree_values(t, mode) == brute_values(t, lambda s: fn(s).value)


@settings(max_examples=60)
@given(trees(max_n=200))
def test_strategy_clears_with_exact_count(t):
    s = tree_clearing_strategy(t)
    assert s.lion_count == tree_lion_number(t).value
    assert simulate(t, s, record=False).cleared


def test_strategy_examples():
    assert tree_clearing_strategy(path_graph(4)).lion_count == 1
    s = tree_clearing_strategy(star(3))
    assert s.lion_count == 2 and simulate(star(3), s).cleared
    t4 = complete_binary_tree(4)
    s = tree_clearing_strategy(t4)
    assert s.lion_count == 3 and simulate(t4, s).cleared


@settings(max_examples=30)
@given(trees(min_n=3, max_n=9), st.data())
def test_pendant_subtree_gets_enough_lions(t, data):
    # an optimal witness must at some point hold L(T') lions inside a pendant subtree T'
    v = data.draw(st.integers(0, t.n - 1))
    x = data.draw(st.sampled_from(sorted(t.adjacency[v])))
    comp = next(c for c in components(t, set(range(t.n)) - {v}) if x in c)
    need = tree_lion_number(induced(t, comp)[0]).value
    tr = simulate(t, lion_number(t).witness)
    assert max(sum(1 for p in st_.lions if p in comp) for st_ in tr.states) >= need


def characterization(t, base):
    """Value straight from the three-heavy-components rule, memoized on vertex sets."""
    memo = {}

    def value(piece):
        if piece in memo:
            return memo[piece]
        if len(piece) == 1:
            out = base
        else:
            best = 0
            for v in piece:
                vals = sorted((value(c) for c in components(t, piece - {v})), reverse=True)
                if len(vals) >= 3:
                    best = max(best, vals[2])
            out = max(1, best + 1) if best >= 1 else 1
        memo[piece] = out
        return out

    return value(frozenset(range(t.n)))


@settings(max_examples=30)
@given(trees(max_n=20))
def test_recursion_matches_characterization(t):
    assert tree_lion_number(t).value == characterization(t, 1)
    assert tree_pathwidth(t).value == characterization(t, 0)
