"""Recovering nim-addition from outcomes alone.

On the 65536 sets of birthday at most 4 we identify two sets when no bounded
context of sums can tell their outcomes apart. For Conway sums this recovers the
Klein four-group of Grundy values 0..3 under xor.
"""
from hylogame import NP, bouton_approximation, bouton_game_value
from hylogame.generators import nim_heap

for kind in ("conway", "selective", "conjunctive"):
    approx = bouton_approximation(kind, NP, 3, 3)
    print(f"{kind}: {len(approx.classes)} classes, outcomes {[str(v) for v in approx.a]}, "
          f"stable {approx.stable}")
    for row in approx.table:
        print("   ", *row)

approx = bouton_approximation("conway", NP, 3, 3)
print("nim heaps 0..3 land in classes", bouton_game_value(nim_heap(3), approx))

few = bouton_approximation("conway", NP, 3, 0)
print(f"\nwith no contexts the classes collapse to outcomes: {len(few.classes)} classes, "
      f"stable {few.stable}, witness {few.witness}")
