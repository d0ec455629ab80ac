"""How contamination moves: one step at a time on small graphs."""

from lions import GameState, Move, StepAction, path_graph, schedule_from_positions, simulate, star, step

# A path a-b-c with one lion on a.  Walking a -> b crosses edge a-b, so a
# cannot be recontaminated from b during that step.
g = path_graph(3)
s0 = GameState((0,), frozenset({1, 2}), frozenset({0}))
s1 = step(g, s0, StepAction((Move(0, 1),)))
print("path, lion a -> b:", "contaminated =", sorted(s1.contaminated))

# On a star the centre is exposed to every leaf; leaving it lets dirt back in.
g = star(3)
s0 = GameState((0,), frozenset({1, 2, 3}), frozenset({0}))
s1 = step(g, s0, StepAction((Move(0, 1),)))
print("star, lion centre -> leaf:", "contaminated =", sorted(s1.contaminated))

# A whole schedule is replayed with simulate; the trace records every state.
g = path_graph(6)
sweep = schedule_from_positions([(v,) for v in range(6)])
trace = simulate(g, sweep)
for t, st in enumerate(trace.states):
    print(f"t={t} lion={st.lions[0]} contaminated={sorted(st.contaminated)}")
print("cleared:", trace.cleared, "monotone:", trace.monotone)
