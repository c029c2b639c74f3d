import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hylogame.errors import CarrierError
from hylogame.game import check_morphism
from hylogame.generators import binexp, elm, nim_heap, random_game, subtraction
from hylogame.hfs import HfsArena, enumerate_universe
from hylogame.values import (
    BIN,
    BUILTIN_ALGEBRAS,
    EMPTY,
    MEX,
    MNP,
    NP,
    REMOTENESS,
    XEM,
    N,
    P,
    RemotenessValue,
    ValueAlgebra,
    algebra_step,
    check_algebra_hom,
    format_value,
    get_algebra,
    hfs_value,
    hylo_eval,
    mex,
    outcome_of_grundy,
    outcome_of_remoteness,
    xem,
)

from oracles import naive_hylo, sample_morphisms


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from (set(c) for c in combinations(items, r))


# Textbook definitions, phrased on the options' values.
def np_ref(vals):
    return "N" if "P" in vals else "P"


def misere_ref(vals):
    return "P" if vals and all(v == "N" for v in vals) else "N"


def remoteness_ref(vals):
    if not vals:
        return 0
    even = [r for r in vals if r % 2 == 0]
    return 1 + (min(even) if even else max(vals))


def mex_ref(vals):
    return next(n for n in range(len(vals) + 1) if n not in vals)


REFERENCE = {
    "np": (np_ref, str),
    "mex": (mex_ref, lambda v: v),
    "empty": (lambda vals: not vals, lambda v: v),
    "xem": (lambda vals: 1 + max(vals) if vals else 0, lambda v: v),
    "mnp": (misere_ref, str),
    "remoteness": (remoteness_ref, lambda r: r.index),
}


def test_mex_examples():
    assert mex(set()) == 0
    assert mex({1, 2}) == 0
    assert mex({0, 1, 3}) == 2


def test_xem_examples():
    assert xem(set()) == 0
    assert xem({0, 2}) == 3
    assert xem({5}) == 6


def test_step_examples():
    assert algebra_step(NP, set()) is P
    assert algebra_step(MNP, {N}) is P
    assert algebra_step(MNP, set()) is N
    assert algebra_step(MNP, [N, N]) is P
    assert algebra_step(REMOTENESS, set()) == RemotenessValue(0)
    assert algebra_step(REMOTENESS, {RemotenessValue(0), RemotenessValue(1)}) == RemotenessValue(1)
    assert algebra_step(BIN, {0, 2}) == 5
    assert algebra_step(EMPTY, set()) is True


def test_carrier_mismatch():
    with pytest.raises(CarrierError):
        algebra_step(MEX, {P})
    with pytest.raises(CarrierError):
        algebra_step(NP, {0})
    with pytest.raises(CarrierError):
        algebra_step(MEX, {True})
    with pytest.raises(TypeError):
        algebra_step(REMOTENESS, {3})


def test_remoteness_value():
    assert str(RemotenessValue(4)) == "P4"
    assert RemotenessValue(3).tag is N
    assert RemotenessValue(1) < RemotenessValue(2)
    with pytest.raises(ValueError):
        RemotenessValue(-1)


def test_algebra_lookup():
    assert set(BUILTIN_ALGEBRAS) == {"np", "mex", "empty", "xem", "mnp", "remoteness"}
    assert get_algebra("grundy") is MEX
    assert get_algebra("outcome") is NP
    assert get_algebra("birthday") is XEM
    assert get_algebra("bin") is BIN
    with pytest.raises(KeyError):
        get_algebra("temperature")
    with pytest.raises(ValueError):
        ValueAlgebra("bad", "complex", lambda s: 0)


def test_format_value():
    assert format_value(True) == "T"
    assert format_value(P) == "P"
    assert format_value(RemotenessValue(3)) == "N3"
    assert format_value(7) == "7"


def test_subtraction_multiples_of_four():
    g = subtraction(12, [1, 2, 3])
    outs = hylo_eval(g, NP)
    for n in range(13):
        assert (outs[g.index(str(n))] is P) == (n % 4 == 0)
    assert outs[g.index("4")] is P


def test_nim_heap_grundy_is_identity():
    assert hylo_eval(nim_heap(20), MEX) == list(range(21))


def test_binexp_10000_is_n():
    g = binexp(10000)
    assert hylo_eval(g, NP)[g.index("10000")] is N


def test_custom_algebra():
    # number of distinct option values: an arbitrary user algebra on naturals
    width = ValueAlgebra("width", "natural", len)
    assert hylo_eval(nim_heap(3), width) == [0, 1, 2, 3]


def _random_games(count, max_states, seed):
    rng = random.Random(seed)
    return [random_game(rng, rng.randint(1, max_states), None, rng.uniform(0.1, 0.6))
            for _ in range(count)]


@pytest.mark.parametrize("name", sorted(REFERENCE))
def test_hylo_matches_textbook_recursion(name):
    ref, view = REFERENCE[name]
    alg = BUILTIN_ALGEBRAS[name]
    for g in _random_games(40, 12, sum(map(ord, name))):
        assert [view(v) for v in hylo_eval(g, alg)] == naive_hylo(g.options, ref)


@st.composite
def games(draw, max_states=10):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_states))
    return random_game(random.Random(seed), n, None, draw(st.floats(0.1, 0.6)))


@settings(max_examples=40, deadline=None)
@given(games(), st.integers(0, 2**32 - 1))
def test_hylo_is_stable_under_morphisms(g, seed):
    for x, y, f in sample_morphisms(random.Random(seed), g):
        check_morphism(f, x, y)
        for alg in BUILTIN_ALGEBRAS.values():
            vx, vy = hylo_eval(x, alg), hylo_eval(y, alg)
            assert [vy[f[s]] for s in x.states] == vx


@settings(max_examples=60, deadline=None)
@given(games(12))
def test_value_transport_identities(g):
    gr, outs = hylo_eval(g, MEX), hylo_eval(g, NP)
    assert [outcome_of_grundy(n) for n in gr] == outs
    ends, bd = hylo_eval(g, EMPTY), hylo_eval(g, XEM)
    assert ends == [b == 0 for b in bd]
    assert [outcome_of_remoteness(r) for r in hylo_eval(g, REMOTENESS)] == outs


def test_algebra_hom_examples():
    samples = list(subsets(range(6)))
    ok, cex = check_algebra_hom(outcome_of_grundy, MEX, NP, samples)
    assert ok and cex is None
    rsamples = [{RemotenessValue(i) for i in s} for s in subsets(range(6))]
    assert check_algebra_hom(outcome_of_remoteness, REMOTENESS, NP, rsamples) == (True, None)
    ok, cex = check_algebra_hom(lambda n: n + 1, MEX, MEX, samples)
    assert not ok and cex == frozenset()


def test_birthday_to_end_is_a_hom():
    samples = list(subsets(range(5)))
    assert check_algebra_hom(lambda n: n == 0, XEM, EMPTY, samples)[0]


def test_galois_laws():
    for s in subsets(range(8)):
        for n in range(17):
            assert (n <= mex(s)) == set(range(n)).issubset(s)
            assert (xem(s) <= n) == s.issubset(range(n))


def test_section_identities():
    assert hylo_eval(nim_heap(50), MEX) == list(range(51))
    assert hylo_eval(nim_heap(50), XEM) == list(range(51))
    assert [r.index for r in hylo_eval(elm(50), REMOTENESS)] == list(range(51))


def test_hfs_value_matches_fragment_evaluation():
    arena = HfsArena()
    u = enumerate_universe(arena, 3)
    g, ids = arena.as_game(u)
    for alg in list(BUILTIN_ALGEBRAS.values()) + [BIN]:
        vals = hylo_eval(g, alg)
        assert [hfs_value(arena, alg, a) for a in ids] == vals
    assert hfs_value(arena, MEX, arena.von_neumann(7)) == 7
