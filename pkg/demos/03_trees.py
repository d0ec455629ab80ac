"""Trees: lion number and pathwidth from the same recursion, and a clearing plan."""

import networkx as nx

from lions import complete_binary_tree, simulate, tree_clearing_strategy, tree_lion_number, tree_pathwidth
from lions.graph import from_networkx

print(" h  lions  pathwidth")
for h in range(0, 11):
    t = complete_binary_tree(h)
    print(f"{h:2d} {tree_lion_number(t).value:6d} {tree_pathwidth(t).value:10d}")

# a random tree with a few thousand vertices is still instant
t = from_networkx(nx.random_labeled_tree(3000, seed=7))
cert = tree_lion_number(t)
print("\nrandom tree on 3000 vertices: lion number", cert.value, "certified at vertex", cert.witness_vertex)
plan = tree_clearing_strategy(t)
trace = simulate(t, plan, record=False)
print(f"strategy: {plan.lion_count} lions, {len(plan.steps)} steps, cleared={trace.cleared}")
