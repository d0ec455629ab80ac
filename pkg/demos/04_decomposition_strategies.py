"""From path decompositions to schedules and back."""

from lions import (clear_monotone_via_connected_decomposition, clear_via_decomposition,
                   connected_pathwidth_exact, cycle_graph, decomposition_from_monotone,
                   monotone_lion_number, pathwidth_exact, simulate)
from lions.graph import Graph

# a 3x3 grid
edges = [(r * 3 + c, r * 3 + c + 1) for r in range(3) for c in range(2)]
edges += [(r * 3 + c, (r + 1) * 3 + c) for r in range(2) for c in range(3)]
grid = Graph.from_edges(9, edges)

for name, g in (("C8", cycle_graph(8)), ("3x3 grid", grid)):
    w, d = pathwidth_exact(g)
    s = clear_via_decomposition(g, d)
    tr = simulate(g, s)
    print(f"{name}: pw={w}; bag sweep uses {s.lion_count} lions, cleared={tr.cleared}, monotone={tr.monotone}")

    cw, cd = connected_pathwidth_exact(g)
    m = clear_monotone_via_connected_decomposition(g, cd)
    tr = simulate(g, m)
    print(f"  cpw={cw}; connected sweep uses {m.lion_count} lions, monotone={tr.monotone}, polite={m.polite}")

    best = monotone_lion_number(g)
    back = decomposition_from_monotone(g, simulate(g, best.witness))
    print(f"  Lm={best.value}; decomposition read back from its witness has width {back.width}")
