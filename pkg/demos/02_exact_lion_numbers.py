"""Exact lion numbers by exhaustive search, with replayable witnesses."""

from lions import (complete, complete_binary_tree, cycle_graph, lion_number, monotone_lion_number,
                   path_graph, simulate, star)

graphs = {
    "path P5": path_graph(5),
    "star K1,3": star(3),
    "cycle C6": cycle_graph(6),
    "complete K4": complete(4),
    "binary tree T2": complete_binary_tree(2),
}

print(f"{'graph':16} {'L':>3} {'Lm':>3} {'nodes':>7}")
for name, g in graphs.items():
    plain = lion_number(g)
    mono = monotone_lion_number(g)
    print(f"{name:16} {plain.value:3d} {mono.value:3d} {plain.stats['nodes']:7d}")

# every witness is an ordinary schedule: replay it and look at it
g = star(3)
w = lion_number(g).witness
print("\nstar witness positions:", w.positions())
print("replay cleared:", simulate(g, w).cleared)
