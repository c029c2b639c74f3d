"""Hereditarily finite sets, interned in an append-only arena.

Every set is stored once, as the strictly increasing tuple of its members'
ids, so set equality is id equality.  Members are always interned before the
sets containing them, which makes ascending id order a valid evaluation order
for anything defined by recursion on membership.

The arena viewed as a game (moves go from a set to its members) is the
terminal game: every game maps into it through :func:`xi_reduce`.
"""
from __future__ import annotations

import os
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import DepthGuardError, SizeGuardError
from .game import Game, ensure_validated, make_game

DEFAULT_BIT_BUDGET = 1 << 20
MAX_UNIVERSE_BIRTHDAY = 4


def default_bit_budget() -> int:
    env = os.environ.get("HYLO_DEPTH_GUARD")
    return int(env) if env else DEFAULT_BIT_BUDGET


class FrozenArenaError(RuntimeError):
    pass


class HfsArena:
    def __init__(self, bit_budget: int | None = None):
        self._children: list[tuple[int, ...]] = []
        self._index: dict[tuple[int, ...], int] = {}
        self._birthday: list[int] = []
        self._codes: dict[int, int] = {}
        self._decoded: dict[int, int] = {}
        self.bit_budget = default_bit_budget() if bit_budget is None else bit_budget
        self.frozen = False
        # memo tables owned by other modules (algebra values, sums), keyed by name
        self.memo: dict[Hashable, dict] = {}
        self.empty = self.intern(())

    def __len__(self):
        return len(self._children)

    def __contains__(self, a):
        return isinstance(a, int) and 0 <= a < len(self._children)

    def freeze(self):
        self.frozen = True
        return self

    def intern(self, children: Iterable[int]) -> int:
        key = tuple(sorted(set(children)))
        found = self._index.get(key)
        if found is not None:
            return found
        if self.frozen:
            raise FrozenArenaError("cannot intern a new set into a frozen arena")
        n = len(self._children)
        for c in key:
            if not 0 <= c < n:
                raise ValueError(f"unknown member id {c}")
        self._children.append(key)
        self._index[key] = n
        self._birthday.append(1 + max(self._birthday[c] for c in key) if key else 0)
        return n

    def lookup(self, children: Iterable[int]) -> int | None:
        return self._index.get(tuple(sorted(set(children))))

    def children(self, a: int) -> tuple[int, ...]:
        return self._children[a]

    def birthday(self, a: int) -> int:
        return self._birthday[a]

    def von_neumann(self, n: int) -> int:
        """The von Neumann natural n = {0, 1, ..., n-1}."""
        members: list[int] = []
        a = self.empty
        for _ in range(n):
            members.append(a)
            a = self.intern(members)
        return a

    def encode(self, a: int) -> int:
        """Ackermann code: the sum of 2**encode(c) over members c."""
        code = self._codes.get(a)
        if code is not None:
            return code
        stack = [a]
        while stack:
            x = stack[-1]
            pending = [c for c in self._children[x] if c not in self._codes]
            if pending:
                stack.extend(pending)
                continue
            stack.pop()
            if x in self._codes:
                continue
            kids = [self._codes[c] for c in self._children[x]]
            if kids and max(kids) + 1 > self.bit_budget:
                raise DepthGuardError(
                    f"Ackermann code of set {x} needs more than {self.bit_budget} bits")
            self._codes[x] = sum(1 << k for k in kids)
        return self._codes[a]

    def decode(self, n: int) -> int:
        """Inverse of :meth:`encode`: members are the decoded binary exponents of n."""
        if n < 0:
            raise ValueError("Ackermann codes are natural numbers")
        found = self._decoded.get(n)
        if found is not None:
            return found
        kids = [self.decode(i) for i in range(n.bit_length()) if n >> i & 1]
        a = self.intern(kids)
        self._decoded[n] = a
        self._codes.setdefault(a, n)
        return a

    def format(self, a: int) -> str:
        """Nested-brace rendering, members in ascending id order."""
        return "{" + ",".join(self.format(c) for c in self._children[a]) + "}"

    def closure(self, roots: Iterable[int]) -> list[int]:
        """All sets hereditarily reachable from ``roots``, in ascending id order."""
        seen = set(roots)
        stack = list(seen)
        while stack:
            for c in self._children[stack.pop()]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return sorted(seen)

    def as_game(self, roots: Iterable[int]) -> tuple[Game, list[int]]:
        """The fragment of the terminal game below ``roots``.

        Returns the game and the arena id of each of its states.
        """
        ids = self.closure(roots)
        pos = {a: i for i, a in enumerate(ids)}
        opts = [[pos[c] for c in self._children[a]] for a in ids]
        names = [self._name(a) for a in ids]
        return ensure_validated(make_game(opts, names, "H")), ids

    def _name(self, a):
        try:
            return str(self.encode(a))
        except DepthGuardError:
            return f"h{a}"


def xi_reduce(arena: HfsArena, g: Game) -> list[int]:
    """The unique game morphism from ``g`` into the terminal game."""
    g = ensure_validated(g)
    xi = [0] * len(g)
    for x in g.order:
        xi[x] = arena.intern(xi[y] for y in g.options[x])
    return xi


def enumerate_universe(arena: HfsArena, k: int) -> list[int]:
    """All hereditarily finite sets of birthday <= k, in ascending id order."""
    if k < 0:
        raise ValueError("birthday bound must be non-negative")
    if k > MAX_UNIVERSE_BIRTHDAY:
        raise SizeGuardError(f"universe of birthday <= {k} is too large to enumerate")
    level = [arena.empty]
    for _ in range(k):
        nxt = []
        for r in range(len(level) + 1):
            for subset in combinations(level, r):
                nxt.append(arena.intern(subset))
        level = nxt
    return sorted(level)


# -- labeled sets ------------------------------------------------------------

TOP = True
BOTTOM = False
TRUTH = (TOP, BOTTOM)


class LabeledHfsArena:
    """Hereditarily finite sets with a label from a fixed alphabet on every node."""

    def __init__(self, alphabet: Sequence[Hashable]):
        self.alphabet = tuple(alphabet)
        self._alphabet_set = set(self.alphabet)
        self._nodes: list[tuple[tuple[int, ...], Hashable]] = []
        self._index: dict[tuple[tuple[int, ...], Hashable], int] = {}
        self._truth_closed: dict[int, bool] = {}

    def __len__(self):
        return len(self._nodes)

    def intern(self, children: Iterable[int], label) -> int:
        if label not in self._alphabet_set:
            raise ValueError(f"label {label!r} not in alphabet")
        key = (tuple(sorted(set(children))), label)
        found = self._index.get(key)
        if found is not None:
            return found
        n = len(self._nodes)
        for c in key[0]:
            if not 0 <= c < n:
                raise ValueError(f"unknown member id {c}")
        self._nodes.append(key)
        self._index[key] = n
        return n

    def lookup(self, children: Iterable[int], label) -> int | None:
        return self._index.get((tuple(sorted(set(children))), label))

    def children(self, a: int) -> tuple[int, ...]:
        return self._nodes[a][0]

    def label(self, a: int):
        return self._nodes[a][1]

    def format(self, a: int, show=None) -> str:
        show = show or _default_label_text
        kids = ",".join(self.format(c, show) for c in self.children(a))
        return f"{show(self.label(a))}{{{kids}}}"

    def is_truth_closed(self, a: int) -> bool:
        """A ⊤-labelled node has only ⊤-labelled members, hereditarily."""
        known = self._truth_closed.get(a)
        if known is not None:
            return known
        kids = self.children(a)
        ok = all(self.is_truth_closed(c) for c in kids)
        if ok and self.label(a) is TOP:
            ok = all(self.label(c) is TOP for c in kids)
        self._truth_closed[a] = ok
        return ok


def _default_label_text(label):
    if label is TOP:
        return "T"
    if label is BOTTOM:
        return "F"
    return str(label)


def characteristic_map(arena: LabeledHfsArena, g: Game, members: Iterable[int]) -> list[int]:
    """Each state x goes to ({chi(x') | x -> x'}, x in members), over labels ⊤/⊥."""
    g = ensure_validated(g)
    s = set(members)
    chi = [0] * len(g)
    for x in g.order:
        chi[x] = arena.intern((chi[y] for y in g.options[x]), TOP if x in s else BOTTOM)
    return chi
