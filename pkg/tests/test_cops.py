import math

import pytest
from hypothesis import given, settings

from lions.cops import (CopSchedule, cop_initial, cop_number_exact, cop_step, cops_from_lions,
                        lions_from_cops, simulate_cops)
from lions.engine import Move, Schedule, StepAction, simulate
from lions.errors import IllegalMoveError, PreconditionError
from lions.graph import Graph, path_graph, star
from lions.search import lion_number
from lions.trees import tree_pathwidth

from conftest import connected_graphs, trees


def walk(*vs):
    return CopSchedule((vs[0],), tuple((Move(a, b),) for a, b in zip(vs, vs[1:])))


def test_star_sweep_by_hand():
    # c=0; S_0={x,y,z}; after c->x: {y,z}; ->c: {y,z}; ->y: {z}; ->c: {z}; ->z: {}
    states = simulate_cops(star(3), walk(0, 1, 0, 2, 0, 3))
    assert [s.dirty_post for s in states] == [{1, 2, 3}, {2, 3}, {2, 3}, {3}, {3}, set()]
    assert all(s.dirty_post == s.dirty_pre - set(s.cops) for s in states)


def test_path_sweep_and_trivial():
    assert not simulate_cops(path_graph(3), walk(0, 1, 2))[-1].dirty_post
    assert not simulate_cops(Graph.from_edges(1, []), walk(0))[-1].dirty_post


def test_illegal_cop_move():
    with pytest.raises(IllegalMoveError):
        cop_step(path_graph(3), cop_initial(path_graph(3), [0]), (Move(0, 2),))


def test_cop_numbers():
    assert all(cop_number_exact(path_graph(n)).value == 1 for n in range(1, 8))
    assert cop_number_exact(star(3)).value == 1
    assert lion_number(star(3)).value == 2


def test_transforms_examples():
    cs = cop_number_exact(star(3)).witness
    s = lions_from_cops(star(3), cs)
    assert s.lion_count == 2 and simulate(star(3), s).cleared
    s = lions_from_cops(path_graph(4), walk(0, 1, 2, 3))
    assert s.positions() == [(0, 0), (0, 1), (1, 2), (2, 3)]
    assert simulate(path_graph(4), s).cleared
    one = Graph.from_edges(1, [])
    assert cops_from_lions(one, Schedule((0,))) == CopSchedule((0,))


def test_transform_preconditions():
    with pytest.raises(PreconditionError):
        lions_from_cops(star(3), walk(0, 1))
    g = path_graph(3)
    analytic = Schedule((0,), (StepAction((Move(0, 1),), remote_clears=frozenset({2})),))
    with pytest.raises(PreconditionError):
        cops_from_lions(g, analytic)


@settings(max_examples=60)
@given(connected_graphs(max_n=6))
def test_sandwich_and_aligned_transforms(g):
    c = cop_number_exact(g)
    lions = lion_number(g)
    assert c.value <= lions.value <= 2 * c.value
    cop_states = simulate_cops(g, c.witness)
    assert not cop_states[-1].dirty_post
    tr = simulate(g, lions_from_cops(g, c.witness))
    assert tr.cleared
    assert all(w.contaminated <= s.dirty_post for w, s in zip(tr.states, cop_states))
    tr = simulate(g, lions.witness)
    back = simulate_cops(g, cops_from_lions(g, lions.witness))
    assert not back[-1].dirty_post
    assert all(s.dirty_post <= w.contaminated for w, s in zip(tr.states, back))


@settings(max_examples=60)
@given(trees(min_n=2, max_n=9))
def test_tree_bounds(t):
    p = tree_pathwidth(t).value
    assert math.ceil(p / 2) <= cop_number_exact(t).value <= p


def test_single_vertex_needs_one_cop():
    assert cop_number_exact(Graph.from_edges(1, [])).value == 1
