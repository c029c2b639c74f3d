"""Property suites runnable from the command line (``hylogame verify <suite>``).

Each suite returns a list of :class:`Check` results.  These are quick
self-checks of an installation; the test suite holds the independent oracles.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .bouton import FiniteMonoid, bouton_approximation, syntactic_factorization
from .game import check_morphism, identity, is_subgame
from .generators import elm, nim, nim_heap, random_game, star
from .hfs import TRUTH, HfsArena, LabeledHfsArena, characteristic_map
from .sums import CONWAY, game_sum, rota_baxter_check
from .universal import count_homs, product, product_map, quotient_coequalizer, stirling2
from .values import MEX, NP, P, REMOTENESS, XEM, hylo_eval, mex, xem


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def _subsets(universe):
    items = list(universe)
    for r in range(len(items) + 1):
        yield from combinations(items, r)


def suite_bouton_theorem():
    g = nim(6, 6, 6)
    outs = hylo_eval(g, NP)
    bad = [x for x in g.states if (outs[x] is P) != (_heaps(g.names[x]) == 0)]
    return [Check("3-heap nim outcome is P iff nim-sum is 0", not bad, f"{len(g)} positions")]


def _heaps(name):
    a, b, c = map(int, name.split("_"))
    return a ^ b ^ c


def suite_nimsum(pairs=200, seed=0):
    rng = random.Random(seed)
    failures = 0
    for _ in range(pairs):
        x = random_game(rng, rng.randint(1, 30), 5)
        y = random_game(rng, rng.randint(1, 30), 5)
        s = game_sum(CONWAY, x, y)
        gx, gy, gs = hylo_eval(x, MEX), hylo_eval(y, MEX), hylo_eval(s, MEX)
        m = len(y)
        failures += any(gs[i * m + j] != gx[i] ^ gy[j] for i in x.states for j in y.states)
    return [Check("grundy of Conway sum is the nim-sum", failures == 0, f"{pairs} random pairs")]


def suite_bouton():
    out = []
    c = bouton_approximation("conway", NP, 3, 3)
    vn = [c.classify(c.arena.von_neumann(m)) for m in range(4)]
    xor = [[i ^ j for j in range(4)] for i in range(4)]
    out.append(Check("conway/outcome: nim-sum table", c.stable and vn == [0, 1, 2, 3] and c.table == xor
                     and [str(v) for v in c.a] == ["P", "N", "N", "N"]))
    s = bouton_approximation("selective", NP, 3, 3)
    out.append(Check("selective/outcome: min with N<P", s.stable and [str(v) for v in s.a] == ["P", "N"]
                     and s.table == [[0, 1], [1, 1]]))
    j = bouton_approximation("conjunctive", NP, 3, 3)
    mins = [[min(a, b) for b in range(4)] for a in range(4)]
    out.append(Check("conjunctive/outcome: min on P0<N1<P2<N3", j.stable and j.table == mins
                     and [str(v) for v in j.a] == ["P", "N", "P", "N"]))
    return out


def suite_ackermann():
    arena = HfsArena()
    ok = all(arena.encode(arena.decode(n)) == n for n in range(1 << 16))
    kids = sorted(arena.encode(c) for c in arena.children(arena.decode(10000)))
    return [Check("encode(decode(n)) == n for n < 2**16", ok),
            Check("decode(10000) has member codes 4,8,9,10,13", kids == [4, 8, 9, 10, 13])]


def suite_stirling():
    bad = [(n, k) for n in range(1, 7) for k in range(1, 5)
           if count_homs(star(n), star(k)) != factorial(k) * stirling2(n, k)]
    return [Check("#Game(S_n, S_k) = k! S(n, k) for n <= 6, k <= 4", not bad, str(bad) if bad else "")]


def suite_product():
    p = product(star(2), star(3))
    return [Check("S2 x S3 has 31 states", len(p) == 31),
            Check("S2 x S3 level profile 6/6/12/6/1", p.level_profile() == [6, 6, 12, 6, 1])]


def suite_nontopos():
    s2 = star(2)
    swap = check_morphism([0, 2, 1], s2, s2)
    pp = product(s2, s2)
    act = product_map(identity(s2), swap, pp, pp)
    left = quotient_coequalizer(pp.game, [(x, act(x)) for x in pp.game.states])
    s1 = quotient_coequalizer(s2, [(1, 2)]).quotient
    right = product(s2, s1)
    return [Check("quotient of S2 x S2 by swap has 6 states", len(left.quotient) == 6),
            Check("S2 x S1 has 3 states", len(right) == 3)]


def suite_galois():
    ok = True
    for s in _subsets(range(8)):
        s = set(s)
        for n in range(17):
            ok &= (n <= mex(s)) == set(range(n)).issubset(s)
            ok &= (xem(s) <= n) == s.issubset(range(n))
    return [Check("xem -| nu -| mex Galois laws", ok)]


def suite_rotabaxter():
    subsets = [set(s) for s in _subsets(range(7))]
    ok = all(rota_baxter_check(s, t) for s in subsets for t in subsets)
    return [Check("Rota-Baxter identity for mex and nim-sum", ok, f"{len(subsets) ** 2} pairs")]


def suite_classifier():
    rng = random.Random(1)
    games = [star(2), elm(3), nim_heap(3)] + [random_game(rng, 6, 4, 0.4) for _ in range(5)]
    ok = True
    for g in games:
        arena = LabeledHfsArena(TRUTH)
        for s in _subsets(g.states):
            chi = characteristic_map(arena, g, s)
            ok &= is_subgame(g, s) == all(arena.is_truth_closed(c) for c in chi)
    return [Check("subgame iff characteristic map is truth-closed", ok)]


def suite_section():
    g = nim_heap(50)
    e = elm(50)
    return [Check("grundy on nim heaps is the identity", hylo_eval(g, MEX) == list(range(51))),
            Check("birthday on nim heaps is the identity", hylo_eval(g, XEM) == list(range(51))),
            Check("remoteness on ElM is the state number",
                  [r.index for r in hylo_eval(e, REMOTENESS)] == list(range(51)))]


def suite_syntactic():
    f = syntactic_factorization(FiniteMonoid.cyclic(4), lambda m: m % 2)
    return [Check("Z/4 with parity target factors through Z/2",
                  len(f.classes) == 2 and f.quotient.table == ((0, 1), (1, 0)))]


SUITES = {
    "bouton-theorem": suite_bouton_theorem,
    "nimsum": suite_nimsum,
    "bouton": suite_bouton,
    "ackermann": suite_ackermann,
    "stirling": suite_stirling,
    "product": suite_product,
    "nontopos": suite_nontopos,
    "galois": suite_galois,
    "rotabaxter": suite_rotabaxter,
    "classifier": suite_classifier,
    "section": suite_section,
    "syntactic": suite_syntactic,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
