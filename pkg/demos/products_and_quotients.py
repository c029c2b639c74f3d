"""Limits and colimits of games.

The product of two stars has 31 positions, arranged in levels of 1, 6, 12 and 6
above the 6 terminal pairs. Quotienting by a symmetry before or after taking a
product gives different answers, so games do not form a topos.
"""
from math import factorial

from hylogame import check_morphism, count_homs, identity, product, product_map, quotient_coequalizer
from hylogame.generators import star
from hylogame.universal import stirling2

p = product(star(2), star(3))
print(f"S2 x S3: {len(p)} positions, level profile {p.level_profile()}")

print("\nmorphisms between stars count surjections of leaves:")
for n in range(1, 6):
    row = [count_homs(star(n), star(k)) for k in range(1, 5)]
    ref = [factorial(k) * stirling2(n, k) for k in range(1, 5)]
    print(f"  S{n} -> S1..S4: {row}  k! S(n,k): {ref}")

s2 = star(2)
swap = check_morphism([0, 2, 1], s2, s2)
pp = product(s2, s2)
act = product_map(identity(s2), swap, pp, pp)
orbits = quotient_coequalizer(pp.game, [(z, act(z)) for z in pp.game.states])
s1 = quotient_coequalizer(s2, [(1, 2)]).quotient
print(f"\n(S2 x S2) / swap has {len(orbits.quotient)} positions")
print(f"S2 x (S2 / swap) has {len(product(s2, s1))} positions")
