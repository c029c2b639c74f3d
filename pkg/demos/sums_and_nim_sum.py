"""Sums of games and the arithmetic of Grundy values.

In a Conway sum the player moves in exactly one component, and the Grundy value
of the sum is the xor of the components. Selective and conjunctive sums behave
differently.
"""
from hylogame import CONJUNCTIVE, CONWAY, MEX, NP, REMOTENESS, SELECTIVE, game_sum, hylo_eval
from hylogame.generators import elm, subtraction
from hylogame.sums import pair_index

x = subtraction(6, [1, 2])
y = elm(4)
gx, gy = hylo_eval(x, MEX), hylo_eval(y, MEX)

s = game_sum(CONWAY, x, y)
gs = hylo_eval(s, MEX)
print(f"Conway sum: {len(s)} positions, {s.edge_count} moves")
for a in (3, 5, 6):
    for b in (1, 4):
        i = pair_index(y, a, b)
        print(f"  g({a}, {b}) = {gs[i]} = {gx[a]} ^ {gy[b]}")

for kind in (SELECTIVE, CONJUNCTIVE):
    t = game_sum(kind, x, y)
    outs = hylo_eval(t, NP)
    print(f"{kind.tag} sum: {len(t)} positions, {t.edge_count} moves; (6, 4) is {outs[pair_index(y, 6, 4)]}")

# under the conjunctive sum every component must move, and the race ends with the shortest one
rem = hylo_eval(game_sum(CONJUNCTIVE, elm(5), elm(3)), REMOTENESS)
print("conjunctive race elm(5) + elm(3) from the top:", rem[pair_index(elm(3), 5, 3)])
