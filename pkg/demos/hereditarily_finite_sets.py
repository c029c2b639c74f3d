"""Every game collapses onto a hereditarily finite set.

Two positions collapse to the same set exactly when their game trees are
bisimilar. Sets are numbered by the Ackermann coding: the members of n are the
sets numbered by the 1-bits of n.
"""
from hylogame import DepthGuardError, HfsArena, xi_reduce
from hylogame.generators import elm, nim_heap, subtraction

arena = HfsArena()
for m in range(5):
    v = arena.von_neumann(m)
    print(f"{m} = {arena.format(v):<36} code {arena.encode(v)}")

n = 10000
members = sorted(arena.encode(c) for c in arena.children(arena.decode(n)))
print(f"\n{n} = {bin(n)}; its members are the sets coded {members}")

# Grundy values of subtraction(8, {1, 2}) only cycle through 0, 1, 2, yet no two heaps are bisimilar
g = subtraction(8, [1, 2])
xs = xi_reduce(arena, g)
print("\nsubtraction(8, {1, 2}) collapses to", len(set(xs)), "distinct sets")
for x in sorted(g.states, key=lambda s: int(g.names[s])):
    try:
        code = arena.encode(xs[x])
        code = code if code < 10**6 else f"~2^{code.bit_length() - 1}"
    except DepthGuardError:
        code = "too large to write down"
    print(f"  heap {g.names[x]}: birthday {arena.birthday(xs[x])}, code {code}")

# nim heaps land on the von Neumann naturals, chains do not
print("\nnim heap 3 ->", arena.format(xi_reduce(arena, nim_heap(3))[3]))
print("chain of 3 ->", arena.format(xi_reduce(arena, elm(3))[3]))
