"""Acceptance suite: fifteen criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines are printed even under
capture) or directly with ``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from functools import lru_cache
from itertools import combinations
from math import factorial
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hylogame.bouton import FiniteMonoid, bouton_approximation, syntactic_factorization  # noqa: E402
from hylogame.game import check_morphism, identity, is_subgame, make_game, validate_well_founded  # noqa: E402
from hylogame.generators import elm, nim, nim_heap, random_game, star  # noqa: E402
from hylogame.hfs import TRUTH, HfsArena, LabeledHfsArena, characteristic_map  # noqa: E402
from hylogame.sums import CONWAY, game_sum, pair_index, rota_baxter_sides  # noqa: E402
from hylogame.universal import (  # noqa: E402
    count_homs,
    enumerate_homs,
    product,
    product_map,
    quotient_coequalizer,
)
from hylogame.values import (  # noqa: E402
    BUILTIN_ALGEBRAS,
    MEX,
    NP,
    REMOTENESS,
    XEM,
    N,
    P,
    hylo_eval,
    mex,
    xem,
)

from oracles import (  # noqa: E402
    brute_syntactic_classes,
    naive_hylo,
    stirling2 as stirling_ref,
    transformation_monoid,
)


CRITERIA = {}


def criterion(number, title, limit=None):
    def wrap(fn):
        CRITERIA[number] = (title, limit, fn)
        return fn
    return wrap


def evaluate(number):
    """Run one criterion; returns (passed, line)."""
    title, limit, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:  # a crash is a failure of the criterion, reported like one
        ok, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok = False
        detail = f"{detail}; took {elapsed:.2f}s, limit {limit}s"
    timing = f"{elapsed:.2f}s" + (f" < {limit}s" if limit is not None else "")
    line = f"{'PASS' if ok else 'FAIL'} {number:2d}. {title} [{timing}]" + (f" {detail}" if detail else "")
    return ok, line


# -- independent oracles ------------------------------------------------------

def grundy_ref(options):
    @lru_cache(maxsize=None)
    def g(x):
        seen = {g(y) for y in options[x]}
        n = 0
        while n in seen:
            n += 1
        return n
    return [g(x) for x in range(len(options))]


def remoteness_ref(options):
    @lru_cache(maxsize=None)
    def r(x):
        vals = [r(y) for y in options[x]]
        if not vals:
            return 0
        even = [v for v in vals if v % 2 == 0]
        return 1 + (min(even) if even else max(vals))
    return [r(x) for x in range(len(options))]


def fs_children(n):
    return [i for i in range(n.bit_length()) if n >> i & 1]


# -- the criteria ---------------------------------------------------------------

@criterion(1, "Bouton's theorem on 3-heap nim, heaps <= 6", limit=1.0)
def c01():
    g = nim(6, 6, 6)
    outs = hylo_eval(g, NP)
    bad = 0
    for x in g.states:
        a, b, c = map(int, g.names[x].split("_"))
        bad += (outs[x] is P) != (a ^ b ^ c == 0)
    return len(g) == 343 and bad == 0, f"{len(g)} states, {bad} mismatches"


@criterion(2, "grundy of Conway sum is the nim-sum, 200 random pairs", limit=10.0)
def c02():
    rng = random.Random(2024)
    bad = 0
    for _ in range(200):
        x = random_game(rng, rng.randint(1, 30), 5, rng.uniform(0.05, 0.4))
        y = random_game(rng, rng.randint(1, 30), 5, rng.uniform(0.05, 0.4))
        assert max(hylo_eval(x, XEM)) <= 5 and max(hylo_eval(y, XEM)) <= 5
        gx, gy = grundy_ref(x.options), grundy_ref(y.options)
        gs = hylo_eval(game_sum(CONWAY, x, y), MEX)
        bad += sum(gs[pair_index(y, a, b)] != gx[a] ^ gy[b] for a in x.states for b in y.states)
    return bad == 0, f"{bad} mismatching pairs of states"


@criterion(3, "Bouton approximation (conway, outcome, k=d=3)", limit=5.0)
def c03():
    approx = bouton_approximation("conway", NP, 3, 3)
    arena = approx.arena
    vn = [approx.classify(arena.von_neumann(m)) for m in range(4)]
    xor = [[i ^ j for j in range(4)] for i in range(4)]
    # class index agrees with Grundy values computed on the universe as a game
    g, ids = arena.as_game(approx.universe)
    gr = dict(zip(ids, grundy_ref(g.options)))
    kernel = all(approx.classify(z) == gr[z] for z in approx.universe)
    ok = (len(approx.classes) == 4 and vn == [0, 1, 2, 3] and approx.table == xor
          and approx.a == [P, N, N, N] and approx.stable and kernel)
    return ok, f"{len(approx.classes)} classes, stable={approx.stable}"


@criterion(4, "Bouton approximation (selective, outcome, k=d=3)")
def c04():
    approx = bouton_approximation("selective", NP, 3, 3)
    rank = {N: 0, P: 1}
    by_min = [[min(approx.a[i], approx.a[j], key=rank.get) for j in range(2)] for i in range(2)]
    table_vals = [[approx.a[c] for c in row] for row in approx.table]
    ok = len(approx.classes) == 2 and approx.stable and table_vals == by_min
    return ok, f"classes {[str(v) for v in approx.a]}, table {approx.table}"


@criterion(5, "Bouton approximation (conjunctive, outcome, k=d=3)")
def c05():
    approx = bouton_approximation("conjunctive", NP, 3, 3)
    g, ids = approx.arena.as_game(approx.universe)
    rem = dict(zip(ids, remoteness_ref(g.options)))
    ordered = all(approx.classify(z) == rem[z] for z in approx.universe)
    mins = [[min(i, j) for j in range(4)] for i in range(4)]
    ok = (len(approx.classes) == 4 and approx.a == [P, N, P, N] and ordered
          and approx.table == mins and approx.stable)
    return ok, f"classes {[str(v) for v in approx.a]}"


@criterion(6, "Ackermann bijection below 2**16", limit=5.0)
def c06():
    arena = HfsArena()
    bad = 0
    for n in range(1 << 16):
        a = arena.decode(n)
        bad += arena.encode(a) != n
        bad += sorted(arena.encode(c) for c in arena.children(a)) != fs_children(n)
    kids = sorted(arena.encode(c) for c in arena.children(arena.decode(10000)))
    return bad == 0 and kids == [4, 8, 9, 10, 13], f"decode(10000) members {kids}"


@criterion(7, "#Game(S_n, S_k) = k! S(n, k) for n <= 6, k <= 4", limit=10.0)
def c07():
    bad = [(n, k) for n in range(1, 7) for k in range(1, 5)
           if count_homs(star(n), star(k)) != factorial(k) * stirling_ref(n, k)]
    return not bad, f"mismatches {bad}" if bad else "24 pairs"


@criterion(8, "product S2 x S3: 31 states, levels 6/6/12/6/1, universal property")
def c08():
    x, y = star(2), star(3)
    p = product(x, y)
    profile = p.level_profile()
    suite = [star(1), star(2), star(3)] + [elm(n) for n in range(5)]
    counts_ok = all(len(enumerate_homs(w, p.game)) == len(enumerate_homs(w, x)) * len(enumerate_homs(w, y))
                    for w in suite)
    coeffs = profile[1:][::-1]
    ok = len(p) == 31 and profile == [6, 6, 12, 6, 1] and counts_ok and coeffs == [1, 6, 12, 6]
    return ok, f"{len(p)} states, profile {profile}"


@criterion(9, "non-topos witness: colimit of swap on S2 x S2")
def c09():
    s2 = star(2)
    swap = check_morphism([0, 2, 1], s2, s2)
    pp = product(s2, s2)
    act = product_map(identity(s2), swap, pp, pp)
    left = quotient_coequalizer(pp.game, [(z, act(z)) for z in pp.game.states])
    q1 = quotient_coequalizer(s2, [(1, 2)])
    right = product(s2, q1.quotient)
    # comparison map: id x q, which is constant on swap orbits
    comp = product_map(identity(s2), q1.projection(), pp, right)
    induced = {}
    for z in pp.game.states:
        induced.setdefault(left.class_map[z], set()).add(comp(z))
    well_defined = all(len(v) == 1 for v in induced.values())
    image = {next(iter(v)) for v in induced.values()}
    bijective = len(induced) == len(image) == len(right)
    ok = len(left.quotient) == 6 and len(right) == 3 and well_defined and not bijective
    return ok, f"{len(left.quotient)} vs {len(right)} states"


@criterion(10, "Galois laws for mex and xem, n <= 16, S in {0..7}")
def c10():
    bad = 0
    for r in range(9):
        for s in combinations(range(8), r):
            s = set(s)
            for n in range(17):
                bad += (n <= mex(s)) != set(range(n)).issubset(s)
                bad += (xem(s) <= n) != s.issubset(range(n))
    return bad == 0, f"{bad} violations"


@criterion(11, "Rota-Baxter identity, all S, T in {0..6}", limit=5.0)
def c11():
    subsets = [set(c) for r in range(8) for c in combinations(range(7), r)]
    bad = 0
    for s in subsets:
        for t in subsets:
            lhs, rhs = rota_baxter_sides(s, t)
            # independent evaluation of both sides
            ms, mt = mex(s), mex(t)
            ref_rhs = mex({mt ^ a for a in s} | {ms ^ b for b in t})
            bad += not (lhs == rhs == ms ^ mt == ref_rhs)
    return bad == 0 and len(subsets) ** 2 == 16384, f"{len(subsets) ** 2} pairs, {bad} failures"


@criterion(12, "subobject classifier: subgame iff truth-closed")
def c12():
    rng = random.Random(12)
    suite = [star(2), star(5), elm(5), nim_heap(3), validate_well_founded(make_game([]))]
    suite += [random_game(rng, rng.randint(1, 6), None, 0.45) for _ in range(15)]
    bad = checked = 0
    for g in suite:
        arena = LabeledHfsArena(TRUTH)
        for r in range(len(g) + 1):
            for s in combinations(g.states, r):
                closed = all(y in s for x in s for y in g.options[x])
                chi = characteristic_map(arena, g, s)
                bad += closed != all(arena.is_truth_closed(c) for c in chi)
                bad += closed != is_subgame(g, s)
                checked += 1
    return bad == 0, f"{checked} subsets over {len(suite)} games"


REFERENCE_STEPS = {
    "np": lambda vals: P if P not in vals else N,
    "mex": lambda vals: next(n for n in range(len(vals) + 1) if n not in vals),
    "empty": lambda vals: len(vals) == 0,
    "xem": lambda vals: max(vals) + 1 if vals else 0,
    "mnp": lambda vals: P if vals and all(v is N for v in vals) else N,
}


@criterion(13, "memoized evaluation equals naive recursion, six algebras")
def c13():
    rng = random.Random(13)
    games = [random_game(rng, rng.randint(1, 12), None, rng.uniform(0.1, 0.6)) for _ in range(100)]
    bad = 0
    for g in games:
        for name, alg in BUILTIN_ALGEBRAS.items():
            fast = hylo_eval(g, alg)
            if name == "remoteness":
                bad += [r.index for r in fast] != remoteness_ref(g.options)
                bad += fast != naive_hylo(g.options, alg.step)
            else:
                bad += fast != naive_hylo(g.options, REFERENCE_STEPS[name])
    return bad == 0 and len(BUILTIN_ALGEBRAS) == 6, f"100 games, {bad} mismatches"


@criterion(14, "syntactic factorization equals brute force; Z/4 parity gives Z/2")
def c14():
    rng = random.Random(14)
    monoids = []
    while len(monoids) < 50:
        found = transformation_monoid(rng, rng.randint(2, 4), rng.randint(1, 2), 8,
                                      with_identity=rng.random() < 0.7)
        if found is not None:
            monoids.append(FiniteMonoid.from_table(*found))
    bad = 0
    for m in monoids:
        values = [rng.randrange(3) for _ in range(len(m))]
        fac = syntactic_factorization(m, values)
        bad += sorted(fac.classes) != brute_syntactic_classes(m.table, values)
    z4 = syntactic_factorization(FiniteMonoid.cyclic(4), lambda x: x % 2)
    z2 = z4.quotient.table == ((0, 1), (1, 0)) and len(z4.classes) == 2
    return bad == 0 and z2, f"50 monoids, {bad} mismatches"


@criterion(15, "section identities on nim heaps and ElM, <= 50")
def c15():
    ok = (hylo_eval(nim_heap(50), MEX) == list(range(51))
          and hylo_eval(nim_heap(50), XEM) == list(range(51))
          and [r.index for r in hylo_eval(elm(50), REMOTENESS)] == list(range(51)))
    return ok, ""


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_acceptance(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print(f"\n{line}", flush=True)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
