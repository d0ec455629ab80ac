"""Three lions clear G_i = T_i + universal vertex, yet T_i alone needs more and more."""

from lions import counterexample_family, simulate, tree_lion_number, tree_pathwidth

print(" i  |T_i|  steps  cleared  pw(T_i)  L(T_i)")
for i in range(1, 8):
    inst = counterexample_family(i)
    tr = simulate(inst.supergraph, inst.schedule, record=False)
    print(f"{i:2d} {inst.tree.n:6d} {inst.duration:6d} {str(tr.cleared):>8} "
          f"{tree_pathwidth(inst.tree).value:8d} {tree_lion_number(inst.tree).value:7d}")

# the left copy is left unguarded for t+4 steps but sits t+6 edges away from the new root
print("\nunguarded gap vs distance per level:", counterexample_family(7).timing)
