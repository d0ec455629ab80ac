"""Zero-visibility cops against lions: each bounds the other."""

from lions import cop_number_exact, cops_from_lions, lion_number, lions_from_cops, simulate, simulate_cops
from lions.verify import connected_graphs

g = connected_graphs(6)[80]
c = cop_number_exact(g)
lions = lion_number(g)
print(f"graph with {g.n} vertices, edges {list(g.edges)}")
print(f"cop number {c.value}, lion number {lions.value}")

two_per_cop = lions_from_cops(g, c.witness)
print("two lions per cop clear it:", simulate(g, two_per_cop).cleared, f"({two_per_cop.lion_count} lions)")
print("cops copying the lions clear it:", not simulate_cops(g, cops_from_lions(g, lions.witness))[-1].dirty_post)

ratios = {}
for h in connected_graphs(6):
    key = (cop_number_exact(h).value, lion_number(h).value)
    ratios[key] = ratios.get(key, 0) + 1
print("\n(cops, lions) over all connected graphs on <= 6 vertices:", dict(sorted(ratios.items())))
