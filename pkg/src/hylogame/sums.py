"""Conway, selective and conjunctive sums of games and of hereditarily finite sets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .game import Game, ensure_validated, make_game
from .hfs import HfsArena
from .values import mex


@dataclass(frozen=True)
class SumKind:
    tag: str
    unital: bool
    commutative: bool = True


CONWAY = SumKind("conway", True)
SELECTIVE = SumKind("selective", True)
CONJUNCTIVE = SumKind("conjunctive", False)

SUM_KINDS = {k.tag: k for k in (CONWAY, SELECTIVE, CONJUNCTIVE)}


def sum_kind(kind: SumKind | str) -> SumKind:
    if isinstance(kind, SumKind):
        return kind
    try:
        return SUM_KINDS[kind]
    except KeyError:
        raise KeyError(f"unknown sum kind {kind!r}") from None


def _moves(tag, xs, ys, x, y):
    """Options of (x, y) given option tuples xs of x and ys of y, as pairs."""
    if tag == "conway":
        return [(a, y) for a in xs] + [(x, b) for b in ys]
    if tag == "selective":
        return ([(a, y) for a in xs] + [(a, b) for a in xs for b in ys]
                + [(x, b) for b in ys])
    if tag == "conjunctive":
        return [(a, b) for a in xs for b in ys]
    raise KeyError(tag)


def game_sum(kind: SumKind | str, x_game: Game, y_game: Game) -> Game:
    """Sum over X×Y; state (x, y) has index x*|Y| + y."""
    kind = sum_kind(kind)
    x_game, y_game = ensure_validated(x_game), ensure_validated(y_game)
    m = len(y_game)
    opts = []
    names = []
    for x in x_game.states:
        for y in y_game.states:
            pairs = _moves(kind.tag, x_game.options[x], y_game.options[y], x, y)
            opts.append([a * m + b for a, b in pairs])
            names.append(f"{x_game.names[x]}_{y_game.names[y]}")
    op = {"conway": "+", "selective": "v", "conjunctive": "^"}[kind.tag]
    g = make_game(opts, names, f"({x_game.name} {op} {y_game.name})")
    return ensure_validated(g)


def pair_index(y_game: Game, x: int, y: int) -> int:
    return x * len(y_game) + y


def nim_sum(m: int, n: int) -> int:
    return m ^ n


def hfs_sum(arena: HfsArena, kind: SumKind | str, a: int, b: int) -> int:
    """Miniature-monoid product of two hereditarily finite sets.

    Conway: A+B = {a'+B} ∪ {A+b'}; selective adds {a'∨b'}; conjunctive is
    {a'∧b'} alone.  Results are memoized on the arena.
    """
    kind = sum_kind(kind)
    memo = arena.memo.setdefault(("sum", kind.tag), {})
    return _hfs_sum(arena, kind, memo, a, b)


def _hfs_sum(arena, kind, memo, a, b):
    if kind.commutative and b < a:
        a, b = b, a
    key = (a, b)
    found = memo.get(key)
    if found is not None:
        return found
    xs, ys = arena.children(a), arena.children(b)
    kids = []
    for p, q in _moves(kind.tag, xs, ys, a, b):
        kids.append(_hfs_sum(arena, kind, memo, p, q))
    r = arena.intern(kids)
    memo[key] = r
    return r


def shift(n: int, s: Iterable[int]) -> set[int]:
    return {n ^ x for x in s}


def rota_baxter_sides(s: Iterable[int], t: Iterable[int]) -> tuple[int, int]:
    """Both sides of mex(S)⊕mex(T) = mex((S⊕mex T) ∪ (mex S⊕T))."""
    s, t = set(s), set(t)
    ms, mt = mex(s), mex(t)
    return ms ^ mt, mex(shift(mt, s) | shift(ms, t))


def rota_baxter_check(s: Iterable[int], t: Iterable[int]) -> bool:
    lhs, rhs = rota_baxter_sides(s, t)
    return lhs == rhs
