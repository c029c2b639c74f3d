"""Who wins three-heap nim?

Outcomes and Grundy values are both folds over the option graph. The P-positions
of nim are exactly those whose heap sizes xor to zero.
"""
from hylogame import MEX, NP, P, hylo_eval
from hylogame.generators import nim

g = nim(3, 4, 5)
outs = hylo_eval(g, NP)
grundy = hylo_eval(g, MEX)
print(f"nim(3, 4, 5): {len(g)} positions, {g.edge_count} moves")

losing = [g.names[x] for x in g.states if outs[x] is P]
print(f"{len(losing)} P-positions, for instance {', '.join(sorted(losing)[:6])}")

start = g.index("3_4_5")
print(f"start 3_4_5 has Grundy value {grundy[start]} (3 ^ 4 ^ 5 = {3 ^ 4 ^ 5})")
winning = [g.names[y] for y in g.options[start] if outs[y] is P]
print("winning replies:", ", ".join(winning))
