"""Game values as step algebras, evaluated by one memoized recursion.

A value algebra folds the *set* of values of a state's options into the value
of the state.  :func:`hylo_eval` runs that fold over a validated game in
topological order, computing each state exactly once; :func:`hfs_value` does
the same on hereditarily finite sets.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Iterable

from .errors import CarrierError, DepthGuardError
from .game import Game, ensure_validated
from .hfs import HfsArena, default_bit_budget


class Outcome(str, enum.Enum):
    N = "N"
    P = "P"

    def __str__(self):
        return self.value


N = Outcome.N
P = Outcome.P


@dataclass(frozen=True, order=True)
class RemotenessValue:
    """Remoteness P_k (k even) or N_k (k odd); orders by index."""

    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("remoteness index must be non-negative")

    @property
    def tag(self) -> Outcome:
        return P if self.index % 2 == 0 else N

    def __str__(self):
        return f"{self.tag.value}{self.index}"


def mex(s: Iterable[int]) -> int:
    s = set(s)
    n = 0
    while n in s:
        n += 1
    return n


def xem(s: Iterable[int]) -> int:
    """Least n strictly above every element of s."""
    s = list(s)
    return max(s) + 1 if s else 0


def _np(s):
    return N if P in s else P


def _empty(s):
    return not s


def _mnp(s):
    return P if s == {N} else N


def _remoteness(s):
    p_indices = [r.index for r in s if r.tag is P]
    if p_indices:
        return RemotenessValue(min(p_indices) + 1)
    return RemotenessValue(xem(r.index for r in s))


def _bin(s):
    if s and max(s) + 1 > default_bit_budget():
        raise DepthGuardError(f"binary value needs {max(s) + 1} bits")
    return sum(1 << k for k in s)


def _is_natural(v):
    return isinstance(v, int) and not isinstance(v, bool) and v >= 0


CARRIERS: dict[str, Callable[[Any], bool]] = {
    "natural": _is_natural,
    "outcome": lambda v: isinstance(v, Outcome),
    "boolean": lambda v: isinstance(v, bool),
    "remoteness": lambda v: isinstance(v, RemotenessValue),
    "bignat": _is_natural,
}


@dataclass(frozen=True)
class ValueAlgebra:
    name: str
    carrier: str
    step: Callable[[frozenset], Any]

    def __post_init__(self):
        if self.carrier not in CARRIERS:
            raise ValueError(f"unknown carrier kind {self.carrier!r}")

    def contains(self, v) -> bool:
        return CARRIERS[self.carrier](v)

    def __call__(self, s):
        return algebra_step(self, s)


NP = ValueAlgebra("np", "outcome", _np)
MEX = ValueAlgebra("mex", "natural", mex)
EMPTY = ValueAlgebra("empty", "boolean", _empty)
XEM = ValueAlgebra("xem", "natural", xem)
MNP = ValueAlgebra("mnp", "outcome", _mnp)
REMOTENESS = ValueAlgebra("remoteness", "remoteness", _remoteness)
BIN = ValueAlgebra("bin", "bignat", _bin)

BUILTIN_ALGEBRAS = {a.name: a for a in (NP, MEX, EMPTY, XEM, MNP, REMOTENESS)}

_ALIASES = {
    "outcome": "np", "grundy": "mex", "end": "empty", "birthday": "xem",
    "misere": "mnp", "ackermann": "bin",
}


def get_algebra(name: str) -> ValueAlgebra:
    name = _ALIASES.get(name, name)
    if name == "bin":
        return BIN
    try:
        return BUILTIN_ALGEBRAS[name]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}") from None


def algebra_step(alg: ValueAlgebra, s: Iterable) -> Any:
    s = frozenset(s)
    for v in s:
        if not alg.contains(v):
            raise CarrierError(f"{v!r} is not in the carrier of {alg.name}")
    return alg.step(s)


def hylo_eval(g: Game, alg: ValueAlgebra) -> list:
    """Value of every state: step applied to the set of its options' values."""
    g = ensure_validated(g)
    vals: list = [None] * len(g)
    step = alg.step
    for x in g.order:
        vals[x] = step(frozenset(vals[y] for y in g.options[x]))
    return vals


def grundy(g: Game) -> list[int]:
    return hylo_eval(g, MEX)


def outcome(g: Game) -> list[Outcome]:
    return hylo_eval(g, NP)


def remoteness(g: Game) -> list[RemotenessValue]:
    return hylo_eval(g, REMOTENESS)


def hfs_value(arena: HfsArena, alg: ValueAlgebra, a: int):
    """Value of a hereditarily finite set, memoized per algebra on the arena."""
    table = arena.memo.setdefault(("value", alg.name), {})
    if a in table:
        return table[a]
    stack = [a]
    while stack:
        x = stack[-1]
        kids = arena.children(x)
        pending = [c for c in kids if c not in table]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if x not in table:
            table[x] = alg.step(frozenset(table[c] for c in kids))
    return table[a]


def check_algebra_hom(h: Callable[[Any], Any], alg_a: ValueAlgebra, alg_b: ValueAlgebra,
                      samples: Iterable[Iterable]):
    """Check h(step_a(S)) == step_b(h[S]) on each sample set.

    Returns ``(True, None)`` or ``(False, S)`` for the first failing sample.
    """
    for s in samples:
        s = frozenset(s)
        if h(algebra_step(alg_a, s)) != algebra_step(alg_b, {h(v) for v in s}):
            return False, s
    return True, None


def outcome_of_grundy(n: int) -> Outcome:
    return N if n > 0 else P


def outcome_of_remoteness(r: RemotenessValue) -> Outcome:
    return r.tag


def format_value(v) -> str:
    if isinstance(v, bool):
        return "T" if v else "F"
    return str(v)
