import pytest
from hypothesis import given
from hypothesis import strategies as st

from lions.engine import (GameState, Move, Schedule, StepAction, check_component_invariant,
                          initial_state, restrict_to_subgraph, schedule_from_positions, simulate, step)
from lions.errors import IllegalMoveError, InvalidSetError, RestrictionError
from lions.graph import Graph, complete, cycle_graph, path_graph, star

from conftest import connected_graphs


def rule(g, w_prev, moves):
    """The contamination rule written out literally, as an oracle."""
    occupied = {d for _, d in moves}
    crossed = {(s, d) for s, d in moves}
    spread = {v for v in range(g.n) if v not in occupied and any(
        w in w_prev and (v, w) not in crossed and (w, v) not in crossed for w in g.adjacency[v])}
    return (set(w_prev) - occupied) | spread


@st.composite
def played(draw, max_steps=8):
    g = draw(connected_graphs())
    k = draw(st.integers(1, 3))
    frames = [tuple(draw(st.integers(0, g.n - 1)) for _ in range(k))]
    for _ in range(draw(st.integers(0, max_steps))):
        frames.append(tuple(draw(st.sampled_from([v, *sorted(g.adjacency[v])])) for v in frames[-1]))
    return g, schedule_from_positions(frames)


def state(g, lions, w):
    w = frozenset(w)
    return GameState(tuple(lions), w, frozenset(range(g.n)) - w)


def test_path_step_blocks_traversed_edge():
    g = path_graph(3)
    out = step(g, state(g, [0], {1, 2}), StepAction((Move(0, 1),)))
    assert out.lions == (1,) and out.contaminated == {2}


def test_star_center_recontaminated():
    g = star(3)
    out = step(g, state(g, [0], {1, 2, 3}), StepAction((Move(0, 1),)))
    assert out.contaminated == {0, 2, 3}


def test_single_vertex_fixed_point():
    g = Graph.from_edges(1, [])
    assert step(g, state(g, [0], ()), StepAction((Move(0, 0),))).contaminated == set()


def test_illegal_moves():
    g = path_graph(3)
    with pytest.raises(IllegalMoveError):
        step(g, state(g, [0], {1, 2}), StepAction((Move(1, 2),)))
    with pytest.raises(IllegalMoveError):
        step(g, state(g, [0], {1, 2}), StepAction((Move(0, 2),)))
    with pytest.raises(IllegalMoveError) as info:
        simulate(g, Schedule((0,), (StepAction((Move(0, 1),)), StepAction((Move(1, 1),)),
                                    StepAction((Move(1, 0),)), StepAction((Move(2, 1),)))))
    assert info.value.step == 4


def test_swap_blocks_both_directions():
    g = path_graph(4)
    # lions swap across 1-2 while 0 and 3 are contaminated; nothing new spreads
    out = step(g, state(g, [1, 2], {0, 3}), StepAction((Move(1, 2), Move(2, 1))))
    assert out.contaminated == {0, 3}


def test_sweeps():
    g = path_graph(5)
    tr = simulate(g, schedule_from_positions([(i,) for i in range(5)]))
    assert tr.cleared and tr.monotone and tr.clear_time == 4
    k4 = complete(4)
    tr = simulate(k4, Schedule((0, 1, 2, 3)))
    assert tr.cleared and tr.clear_time == 0
    assert tr.states[0].contaminated == frozenset()


def test_one_lion_never_clears_star():
    g = star(3)
    # every one-lion walk of length <= 6 from any start, exhaustively
    frontier = {((v,), frozenset(range(4)) - {v}) for v in range(4)}
    for _ in range(6):
        nxt = set()
        for (v,), w in frontier:
            assert w
            for d in (v, *g.adjacency[v]):
                nxt.add(((d,), frozenset(rule(g, w, [(v, d)]))))
        frontier = nxt


def test_remote_operations_apply_after_rule():
    g = path_graph(3)
    act = StepAction((Move(0, 0),), remote_clears=frozenset({2}))
    assert step(g, state(g, [0], {1, 2}), act).contaminated == {1}
    act = StepAction((Move(0, 0),), remote_contaminations=frozenset({1}))
    assert step(g, state(g, [0], set()), act).contaminated == {1}
    with pytest.raises(InvalidSetError):
        step(g, state(g, [0], set()), StepAction((Move(0, 0),), remote_contaminations=frozenset({0})))


def test_component_invariant_cases():
    g = path_graph(5)
    assert check_component_invariant(g, initial_state(g, [2])) == []
    island = state(g, [0], {2})  # cleared ring 1, 3 with no lion next to it
    assert check_component_invariant(g, island) == ["component-adjacency:2"]
    assert check_component_invariant(g, state(g, [0], {1, 2, 3, 4})) == []


def test_restriction():
    g = path_graph(5)
    s = Schedule((3,), (StepAction((Move(3, 4),), remote_clears=frozenset({0, 1})),),
                 initial_remote_clears=frozenset({0, 1}))
    r = restrict_to_subgraph(s, g, {2, 3, 4})
    h = path_graph(3)
    assert [x.contaminated for x in simulate(h, r).states] == [{0, 2}, {0, 1}]
    plain = schedule_from_positions([(0,), (1,), (2,)])
    assert restrict_to_subgraph(plain, g, range(5)) == plain
    with pytest.raises(RestrictionError):
        restrict_to_subgraph(plain, g, {0, 1})


@given(played())
def test_step_matches_literal_rule_and_replay(case):
    g, s = case
    tr = simulate(g, s)
    w = frozenset(range(g.n)) - set(s.initial_positions)
    assert tr.states[0].contaminated == w
    for t, action in enumerate(s.steps, start=1):
        w = frozenset(rule(g, w, action.moves))
        assert tr.states[t].contaminated == w
        assert step(g, tr.states[t - 1], action) == tr.states[t]
    for st_ in tr.states:
        assert st_.cleared | st_.contaminated == frozenset(range(g.n))
        assert not st_.cleared & st_.contaminated
        assert st_.lion_set <= st_.cleared
    assert tr.monotone == all(b <= a for a, b in zip(tr.contaminated_sets(), tr.contaminated_sets()[1:]))
    assert simulate(g, s).states == tr.states
    fast = simulate(g, s, record=False)
    assert fast.final == tr.final and fast.clear_time == tr.clear_time


@given(played(max_steps=12))
def test_component_invariant_on_play(case):
    g, s = case
    assert simulate(g, s, check_invariants=True).violations == []


def test_large_replay_without_recording():
    g = cycle_graph(2000)
    frames = [(0, 0)] + [(i, (-i) % 2000) for i in range(1, 1001)]
    tr = simulate(g, schedule_from_positions(frames), record=False)
    assert tr.cleared and len(tr.states) == 1
