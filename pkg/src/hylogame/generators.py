"""Built-in game families: nim, subtraction games, ElM chains, binary-exponent nim, stars."""
from __future__ import annotations

from .game import Game, RuleGame, make_game, reachable_fragment, validate_well_founded


def nim_heap(n: int) -> Game:
    """Single-heap nim on heaps 0..n; state i has options 0..i-1."""
    g = make_game([range(i) for i in range(n + 1)], name=f"nim({n})")
    return validate_well_founded(g)


def elm(n: int) -> Game:
    """The chain n -> n-1 -> ... -> 0 (only one petal can be taken)."""
    g = make_game([[i - 1] if i else [] for i in range(n + 1)], name=f"elm({n})")
    return validate_well_founded(g)


chain = elm


def star(n: int) -> Game:
    """S_n: a root (state 0) with n terminal options."""
    if n < 0:
        raise ValueError("star size must be non-negative")
    opts = [list(range(1, n + 1))] + [[] for _ in range(n)]
    names = ["top"] + [f"leaf{i}" for i in range(n)]
    return validate_well_founded(make_game(opts, names, f"S{n}"))


def subtraction_rule(subtractions) -> RuleGame:
    subs = tuple(sorted(set(subtractions)))
    if not subs or subs[0] <= 0:
        raise ValueError("subtraction set must consist of positive integers")
    return RuleGame(lambda n: [n - s for s in subs if s <= n], f"sub{list(subs)}")


def binary_exponent_rule() -> RuleGame:
    """n moves to each exponent appearing in the binary expansion of n."""
    return RuleGame(lambda n: [i for i in range(n.bit_length()) if n >> i & 1], "binexp")


def nim_rule() -> RuleGame:
    """Multi-heap nim on tuples of heap sizes."""

    def expand(heaps):
        out = []
        for i, h in enumerate(heaps):
            for k in range(h):
                out.append(heaps[:i] + (k,) + heaps[i + 1:])
        return out

    return RuleGame(expand, "nim")


def nim(*heaps: int, max_states: int = 100_000) -> Game:
    g, _ = reachable_fragment(nim_rule(), tuple(heaps), max_states, name=f"nim{list(heaps)}")
    return g


def subtraction(n: int, subtractions, max_states: int = 100_000) -> Game:
    g, _ = reachable_fragment(subtraction_rule(subtractions), n, max_states)
    return g


def binexp(n: int, max_states: int = 100_000) -> Game:
    g, _ = reachable_fragment(binary_exponent_rule(), n, max_states, name=f"binexp({n})")
    return g


def random_game(rng, n_states: int, max_depth: int | None = None, edge_prob: float = 0.3) -> Game:
    """Random well-founded game.

    Each state gets a level in ``0..max_depth`` and may only move to states of
    strictly lower level, so no play is longer than ``max_depth`` moves.
    ``rng`` is a :class:`random.Random`.
    """
    depth = n_states if max_depth is None else max_depth
    levels = [rng.randint(0, depth) for _ in range(n_states)]
    opts = [[j for j in range(n_states) if levels[j] < levels[i] and rng.random() < edge_prob]
            for i in range(n_states)]
    return validate_well_founded(make_game(opts, name=f"random({n_states})"))
