"""Limits and colimits of finite games, hom enumeration and isomorphism search.

Colimits are computed on underlying sets.  Binary products are not: the
product of two games is built bottom-up from labelled hereditarily finite
sets whose member labels cover both factors' option sets exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable

from .errors import BudgetExceeded, SourceMismatch
from .game import (
    Game,
    GameMorphism,
    Subgame,
    check_morphism,
    ensure_validated,
    make_game,
)
from .hfs import LabeledHfsArena
from .values import XEM, hylo_eval

DEFAULT_PRODUCT_BUDGET = 10**6


def equalizer(f: GameMorphism, g: GameMorphism) -> Subgame:
    """States all of whose descendants (itself included) are sent to the same place."""
    if not (f.source.same_structure(g.source) and f.target.same_structure(g.target)):
        raise SourceMismatch("equalizer needs a parallel pair of morphisms")
    src = ensure_validated(f.source)
    ok = [False] * len(src)
    for x in src.order:
        ok[x] = f(x) == g(x) and all(ok[y] for y in src.options[x])
    return Subgame(src, frozenset(x for x in src.states if ok[x]))


def coproduct(x_game: Game, y_game: Game):
    """Disjoint union; returns ``(game, inl, inr)``."""
    x_game, y_game = ensure_validated(x_game), ensure_validated(y_game)
    shift = len(x_game)
    opts = list(x_game.options) + [[y + shift for y in o] for o in y_game.options]
    names = [f"L.{n}" for n in x_game.names] + [f"R.{n}" for n in y_game.names]
    s = ensure_validated(make_game(opts, names, f"({x_game.name} | {y_game.name})"))
    inl = check_morphism(list(x_game.states), x_game, s)
    inr = check_morphism([y + shift for y in y_game.states], y_game, s)
    return s, inl, inr


@dataclass(frozen=True)
class QuotientGame:
    source: Game
    class_map: tuple[int, ...]
    quotient: Game

    def projection(self) -> GameMorphism:
        """The quotient map, checked as a game morphism."""
        return check_morphism(self.class_map, self.source, self.quotient)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.quotient.states]
        for x, c in enumerate(self.class_map):
            out[c].append(x)
        return out


def quotient_coequalizer(g: Game, pairs: Iterable[tuple[int, int]]) -> QuotientGame:
    """Identify the given pairs (and everything their equivalence closure forces).

    A class's options are the classes of its members' options.  The result is
    re-validated, so a quotient that acquires a cycle raises
    :class:`~hylogame.errors.WellFoundednessError`.
    """
    g = ensure_validated(g)
    parent = list(g.states)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots: dict[int, int] = {}
    class_map = []
    for x in g.states:
        r = find(x)
        if r not in roots:
            roots[r] = len(roots)
        class_map.append(roots[r])
    opts: list[set[int]] = [set() for _ in roots]
    names = [""] * len(roots)
    for x in g.states:
        c = class_map[x]
        opts[c].update(class_map[y] for y in g.options[x])
        if not names[c]:
            names[c] = g.names[x]
    q = ensure_validated(make_game(opts, names, f"{g.name}/~"))
    return QuotientGame(g, tuple(class_map), q)


def coequalizer(f: GameMorphism, g: GameMorphism) -> QuotientGame:
    if not (f.source.same_structure(g.source) and f.target.same_structure(g.target)):
        raise SourceMismatch("coequalizer needs a parallel pair of morphisms")
    return quotient_coequalizer(f.target, [(f(x), g(x)) for x in f.source.states])


# -- binary products -----------------------------------------------------------

@dataclass(frozen=True)
class ProductGame:
    factors: tuple[Game, Game]
    game: Game
    labels: tuple[tuple[int, int], ...]
    arena: LabeledHfsArena
    proj1: GameMorphism
    proj2: GameMorphism

    def __len__(self):
        return len(self.game)

    def level_profile(self) -> list[int]:
        """Node counts grouped by (birthday, number of options), ascending."""
        bd = hylo_eval(self.game, XEM)
        groups: dict[tuple[int, int], int] = {}
        for s in self.game.states:
            key = (bd[s], len(self.game.options[s]))
            groups[key] = groups.get(key, 0) + 1
        return [groups[k] for k in sorted(groups)]

    def pair(self, f: GameMorphism, g: GameMorphism) -> GameMorphism:
        """The unique morphism W -> X×Y with projections f and g."""
        if not f.source.same_structure(g.source):
            raise SourceMismatch("pairing needs morphisms out of one game")
        w = ensure_validated(f.source)
        node = [0] * len(w)
        for s in w.order:
            found = self.arena.lookup((node[t] for t in w.options[s]), (f(s), g(s)))
            if found is None:
                raise ValueError(f"state {s} has no product node; are f and g morphisms?")
            node[s] = found
        return check_morphism(node, w, self.game)


def product(x_game: Game, y_game: Game, budget: int = DEFAULT_PRODUCT_BUDGET) -> ProductGame:
    """Categorical product by enumerating labelled sets bottom-up.

    A node labelled (x, y) is a set of already-admitted nodes whose x-labels
    are exactly the options of x and whose y-labels are exactly the options
    of y.  Candidate member sets are tried in ascending bitmask order over the
    pool of compatible nodes; ``budget`` caps the number of candidates tried.
    """
    x_game, y_game = ensure_validated(x_game), ensure_validated(y_game)
    arena = LabeledHfsArena([(x, y) for x in x_game.states for y in y_game.states])
    bx, by = hylo_eval(x_game, XEM), hylo_eval(y_game, XEM)
    by_label: dict[tuple[int, int], list[int]] = {}
    tried = 0
    pairs = sorted(((x, y) for x in x_game.states for y in y_game.states),
                   key=lambda p: (bx[p[0]] + by[p[1]], p))
    for x, y in pairs:
        ox, oy = set(x_game.options[x]), set(y_game.options[y])
        if not ox and not oy:
            by_label.setdefault((x, y), []).append(arena.intern((), (x, y)))
            continue
        if not ox or not oy:
            continue
        pool = [(n, a, b) for a in sorted(ox) for b in sorted(oy) for n in by_label.get((a, b), ())]
        for mask in range(1, 1 << len(pool)):
            tried += 1
            if tried > budget:
                raise BudgetExceeded(f"product enumeration tried more than {budget} candidate sets")
            chosen = [pool[i] for i in range(len(pool)) if mask >> i & 1]
            if {a for _, a, _ in chosen} == ox and {b for _, _, b in chosen} == oy:
                by_label.setdefault((x, y), []).append(
                    arena.intern((n for n, _, _ in chosen), (x, y)))
    n = len(arena)
    labels = tuple(arena.label(i) for i in range(n))
    counters: dict[tuple[int, int], count] = {}
    names = []
    for lx, ly in labels:
        k = next(counters.setdefault((lx, ly), count()))
        names.append(f"{x_game.names[lx]}_{y_game.names[ly]}.{k}")
    g = ensure_validated(make_game([arena.children(i) for i in range(n)], names,
                                   f"({x_game.name} x {y_game.name})"))
    p1 = check_morphism([lx for lx, _ in labels], g, x_game)
    p2 = check_morphism([ly for _, ly in labels], g, y_game)
    return ProductGame((x_game, y_game), g, labels, arena, p1, p2)


def product_map(f: GameMorphism, g: GameMorphism, source: ProductGame, target: ProductGame) -> GameMorphism:
    """f × g between products, as the pairing of f∘π1 and g∘π2."""
    return target.pair(source.proj1.then(f), source.proj2.then(g))


# -- hom enumeration -------------------------------------------------------------

def _option_index(y_game: Game) -> dict[tuple[int, ...], list[int]]:
    idx: dict[tuple[int, ...], list[int]] = {}
    for y in y_game.states:
        idx.setdefault(y_game.options[y], []).append(y)
    return idx


def iter_homs(x_game: Game, y_game: Game, injective: bool = False):
    """Yield every morphism X -> Y.

    States of X are assigned in topological order, so when x is reached the
    images of its options are known and x must go to a target state whose
    option set is exactly that image.  Candidates are tried in ascending order.
    """
    x_game, y_game = ensure_validated(x_game), ensure_validated(y_game)
    order = x_game.order
    idx = _option_index(y_game)
    assign = [-1] * len(x_game)
    used: set[int] = set()

    def go(i):
        if i == len(order):
            yield GameMorphism(x_game, y_game, tuple(assign))
            return
        x = order[i]
        image = tuple(sorted({assign[c] for c in x_game.options[x]}))
        for y in idx.get(image, ()):
            if injective and y in used:
                continue
            assign[x] = y
            used.add(y)
            yield from go(i + 1)
            used.discard(y)
        assign[x] = -1

    yield from go(0)


def enumerate_homs(x_game: Game, y_game: Game, limit: int = 10**6) -> list[GameMorphism]:
    out = []
    for f in iter_homs(x_game, y_game):
        if len(out) >= limit:
            raise BudgetExceeded(f"more than {limit} morphisms")
        out.append(f)
    return out


def count_homs(x_game: Game, y_game: Game, limit: int = 10**7) -> int:
    n = 0
    for _ in iter_homs(x_game, y_game):
        n += 1
        if n > limit:
            raise BudgetExceeded(f"more than {limit} morphisms")
    return n


def are_isomorphic(x_game: Game, y_game: Game):
    """``(True, f)`` for a bijective morphism f whose inverse is a morphism, else ``(False, None)``."""
    x_game, y_game = ensure_validated(x_game), ensure_validated(y_game)
    if len(x_game) != len(y_game) or x_game.edge_count != y_game.edge_count:
        return False, None
    if sorted(map(len, x_game.options)) != sorted(map(len, y_game.options)):
        return False, None
    for f in iter_homs(x_game, y_game, injective=True):
        inv = [0] * len(y_game)
        for x, y in enumerate(f.mapping):
            inv[y] = x
        check_morphism(inv, y_game, x_game)
        return True, f
    return False, None


def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind by the standard recurrence."""
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, k) + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]
