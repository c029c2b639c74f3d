"""Minimum monoid factorizations and bounded Bouton-monoid approximations.

:func:`syntactic_factorization` quotients a finite monoid by the coarsest
congruence on which a target function is constant (the syntactic
congruence), found by Moore-style partition refinement.

:func:`bouton_approximation` applies the same idea to the miniature monoid of
a sum on hereditarily finite sets.  The true construction lives on an
infinite set, so elements are compared through finite signatures: the target
value of the element and of its products with every context of bounded
birthday.  Whether the resulting table is a well-defined operation is
checked over the whole universe and reported through ``stable``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .errors import InstabilityError, SizeGuardError, UnknownSignature
from .game import Game
from .hfs import HfsArena, enumerate_universe, xi_reduce
from .sums import SumKind, hfs_sum, sum_kind
from .values import ValueAlgebra, hfs_value


@dataclass(frozen=True)
class FiniteMonoid:
    """Multiplication table on 0..n-1; ``unit`` is None for a semigroup."""

    table: tuple[tuple[int, ...], ...]
    unit: int | None = None

    def __post_init__(self):
        n = len(self.table)
        t = self.table
        if any(len(row) != n or any(not 0 <= v < n for v in row) for row in t):
            raise ValueError("table must be n×n over 0..n-1")
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise ValueError(f"not associative at ({a}, {b}, {c})")
        if self.unit is not None:
            e = self.unit
            if any(t[e][a] != a or t[a][e] != a for a in range(n)):
                raise ValueError(f"{e} is not a unit")

    @classmethod
    def from_table(cls, table, unit=None):
        return cls(tuple(tuple(row) for row in table), unit)

    @classmethod
    def cyclic(cls, n: int):
        return cls.from_table([[(a + b) % n for b in range(n)] for a in range(n)], 0)

    def __len__(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    @property
    def commutative(self):
        n = len(self)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def find_unit(self):
        n = len(self)
        for e in range(n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(n)):
                return e
        return None


@dataclass(frozen=True)
class MinimumFactorization:
    classes: tuple[tuple[int, ...], ...]
    quotient: FiniteMonoid
    q: tuple[int, ...]
    a: tuple[Any, ...]


def _relabel(keys):
    ids: dict = {}
    return [ids.setdefault(k, len(ids)) for k in keys]


def syntactic_factorization(m: FiniteMonoid, f: Sequence | Callable) -> MinimumFactorization:
    n = len(m)
    values = [f(x) for x in range(n)] if callable(f) else list(f)
    if len(values) != n:
        raise ValueError("target must have one value per element")
    t = m.table
    two_sided = not m.commutative
    cls = _relabel(values)
    while True:
        if two_sided:
            keys = [(cls[x], tuple(cls[t[a][x]] for a in range(n)),
                     tuple(cls[t[x][a]] for a in range(n))) for x in range(n)]
        else:
            keys = [(cls[x], tuple(cls[t[a][x]] for a in range(n))) for x in range(n)]
        new = _relabel(keys)
        if max(new, default=-1) == max(cls, default=-1):
            break
        cls = new
    k = max(cls, default=-1) + 1
    reps = [cls.index(c) for c in range(k)]
    table = [[cls[t[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    unit = cls[m.unit] if m.unit is not None else None
    classes = tuple(tuple(x for x in range(n) if cls[x] == c) for c in range(k))
    return MinimumFactorization(classes, FiniteMonoid.from_table(table, unit), tuple(cls),
                                tuple(values[r] for r in reps))


# -- Bouton approximation ------------------------------------------------------

DEFAULT_MAX_BOUND = 3


@dataclass
class BoutonApproximation:
    kind: SumKind
    value: ValueAlgebra
    k: int
    d: int
    arena: HfsArena
    universe: list[int]
    contexts: list[int]
    two_sided: bool = False
    signatures: dict[int, tuple] = field(default_factory=dict)
    classes: list[list[int]] = field(default_factory=list)
    table: list[list[int | None]] = field(default_factory=list)
    a: list[Any] = field(default_factory=list)
    stable: bool = False
    witness: tuple[int, int] | None = None
    _by_signature: dict[tuple, int] = field(default_factory=dict, repr=False)
    _class_of: dict[int, int] = field(default_factory=dict, repr=False)

    def mul(self, x: int, y: int) -> int:
        return hfs_sum(self.arena, self.kind, x, y)

    def signature(self, z: int) -> tuple:
        sig = self.signatures.get(z)
        if sig is not None:
            return sig
        v = lambda h: hfs_value(self.arena, self.value, h)
        parts = [v(z)] + [v(self.mul(c, z)) for c in self.contexts]
        if self.two_sided:
            parts += [v(self.mul(z, c)) for c in self.contexts]
            parts += [v(self.mul(self.mul(c1, z), c2)) for c1 in self.contexts for c2 in self.contexts]
        sig = tuple(parts)
        self.signatures[z] = sig
        return sig

    def classify(self, z: int) -> int:
        c = self._class_of.get(z)
        if c is not None:
            return c
        c = self._by_signature.get(self.signature(z))
        if c is None:
            raise UnknownSignature(
                f"set {z} has a signature outside the {len(self.classes)} known classes; raise k or d")
        self._class_of[z] = c
        return c

    @property
    def unit(self) -> int | None:
        return self.classify(self.arena.empty) if self.kind.unital else None

    def monoid(self) -> FiniteMonoid:
        self.raise_if_unstable()
        return FiniteMonoid.from_table(self.table, self.unit)

    def raise_if_unstable(self):
        if not self.stable:
            raise InstabilityError(
                f"class table is not well defined (witness pair {self.witness}); raise k or d")


def bouton_approximation(kind: SumKind | str, value: ValueAlgebra, k: int = 3, d: int = 3,
                         arena: HfsArena | None = None, max_bound: int = DEFAULT_MAX_BOUND,
                         two_sided: bool = False) -> BoutonApproximation:
    """Approximate the Bouton monoid of (kind, value) on sets of birthday <= k.

    Contexts are the sets of birthday <= d.  Classes are ordered by the
    smallest Ackermann code among their members.  An unstable result (some
    product lands in a class other than the table predicts, or in no known
    class) is returned with ``stable=False`` and a witness pair.
    """
    kind = sum_kind(kind)
    if not (0 <= k <= max_bound and 0 <= d <= max_bound):
        raise SizeGuardError(f"bounds k={k}, d={d} exceed the guard {max_bound}")
    arena = arena or HfsArena()
    universe = enumerate_universe(arena, k)
    contexts = enumerate_universe(arena, d)
    approx = BoutonApproximation(kind, value, k, d, arena, universe, contexts,
                                 two_sided=two_sided or not kind.commutative)
    groups: dict[tuple, list[int]] = {}
    for z in universe:
        groups.setdefault(approx.signature(z), []).append(z)
    ordered = sorted(groups.items(), key=lambda kv: min(arena.encode(z) for z in kv[1]))
    for i, (sig, members) in enumerate(ordered):
        approx._by_signature[sig] = i
        approx.classes.append(sorted(members, key=arena.encode))
        for z in members:
            approx._class_of[z] = i
        approx.a.append(sig[0])
    reps = [members[0] for members in approx.classes]
    for ri in reps:
        row = []
        for rj in reps:
            row.append(approx._by_signature.get(approx.signature(approx.mul(ri, rj))))
        approx.table.append(row)
    approx.stable = True
    for x in universe:
        for y in universe:
            got = approx._by_signature.get(approx.signature(approx.mul(x, y)))
            if got is None or got != approx.table[approx._class_of[x]][approx._class_of[y]]:
                approx.stable = False
                approx.witness = (x, y)
                break
        if not approx.stable:
            break
    return approx


def classify_element(z: int, approx: BoutonApproximation) -> int:
    return approx.classify(z)


def bouton_game_value(g: Game, approx: BoutonApproximation) -> list[int]:
    """Class of every state: the class of its image in the terminal game."""
    return [approx.classify(h) for h in xi_reduce(approx.arena, g)]
