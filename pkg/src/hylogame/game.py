"""Finite impartial games as well-founded option graphs.

A :class:`Game` stores dense integer states ``0..n-1`` with a sorted tuple of
options per state.  Validation checks the option relation for cycles and
records a topological evaluation order (options before their predecessors),
which every recursive evaluation in the package relies on.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import (
    BudgetExceeded,
    GraphConditionError,
    PathLiftingError,
    SourceMismatch,
    WellFoundednessError,
)


@dataclass(frozen=True, eq=False)
class Game:
    options: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]
    name: str = ""
    order: tuple[int, ...] | None = None

    def __post_init__(self):
        n = len(self.options)
        if len(self.names) != n:
            raise ValueError("one name per state required")
        for x, opts in enumerate(self.options):
            for a, b in zip(opts, opts[1:]):
                if a >= b:
                    raise ValueError(f"options of state {x} must be strictly increasing")
            for y in opts:
                if not 0 <= y < n:
                    raise ValueError(f"state {x} has out-of-range option {y}")

    def __len__(self):
        return len(self.options)

    def __repr__(self):
        tag = "validated" if self.validated else "unvalidated"
        return f"Game({self.name!r}, {len(self)} states, {self.edge_count} edges, {tag})"

    @property
    def states(self):
        return range(len(self.options))

    @property
    def validated(self):
        return self.order is not None

    @cached_property
    def edge_count(self):
        return sum(len(o) for o in self.options)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        preds: list[list[int]] = [[] for _ in self.options]
        for x, opts in enumerate(self.options):
            for y in opts:
                preds[y].append(x)
        return tuple(tuple(p) for p in preds)

    @cached_property
    def _name_index(self):
        return {nm: i for i, nm in enumerate(self.names)}

    def index(self, name: str) -> int:
        return self._name_index[name]

    def edges(self):
        for x, opts in enumerate(self.options):
            for y in opts:
                yield x, y

    def terminals(self):
        return [x for x, opts in enumerate(self.options) if not opts]

    def same_structure(self, other: "Game") -> bool:
        return self.options == other.options


def make_game(options: Sequence[Iterable[int]], names: Sequence[str] | None = None, name: str = "") -> Game:
    """Game from per-state option lists; duplicates are dropped, nothing is validated."""
    opts = tuple(tuple(sorted(set(o))) for o in options)
    if names is None:
        names = [str(i) for i in range(len(opts))]
    return Game(opts, tuple(names), name)


def build_finite_game(spec: Iterable[tuple[str, Iterable[str]]], name: str = "") -> Game:
    """Build a game from ``(state, successors)`` pairs.

    Declared states get indices in declaration order; successors that are
    never declared become terminal states appended in first-seen order.
    Well-foundedness is not checked here.
    """
    spec = [(s, list(succ)) for s, succ in spec]
    index: dict[str, int] = {}
    names: list[str] = []
    for s, _ in spec:
        if s in index:
            raise ValueError(f"state {s!r} declared twice")
        index[s] = len(names)
        names.append(s)
    for _, succ in spec:
        for t in succ:
            if t not in index:
                index[t] = len(names)
                names.append(t)
    options: list[list[int]] = [[] for _ in names]
    for s, succ in spec:
        options[index[s]] = [index[t] for t in succ]
    return make_game(options, names, name)


def validate_well_founded(g: Game) -> Game:
    """Return ``g`` tagged with a topological order, or raise with a witness cycle.

    The order is a depth-first post-order started from states in ascending
    index order, so options always precede the states that reach them.
    """
    if g.validated:
        return g
    n = len(g)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * n
    order: list[int] = []
    for root in range(n):
        if colour[root] != WHITE:
            continue
        colour[root] = GREY
        path = [root]
        stack = [iter(g.options[root])]
        while stack:
            for y in stack[-1]:
                if colour[y] == GREY:
                    cycle = path[path.index(y):] + [y]
                    raise WellFoundednessError(cycle)
                if colour[y] == WHITE:
                    colour[y] = GREY
                    path.append(y)
                    stack.append(iter(g.options[y]))
                    break
            else:
                stack.pop()
                x = path.pop()
                colour[x] = BLACK
                order.append(x)
    return Game(g.options, g.names, g.name, tuple(order))


def ensure_validated(g: Game) -> Game:
    return g if g.validated else validate_well_founded(g)


# -- rule-presented games ---------------------------------------------------

@dataclass(frozen=True)
class RuleGame:
    """A game given lazily by a deterministic ``expand(token) -> options`` rule."""

    expand: Callable[[Hashable], Iterable[Hashable]]
    description: str = ""

    def options_of(self, token):
        return set(self.expand(token))


def reachable_fragment(rule: RuleGame, start, max_states: int = 10_000, name: str = ""):
    """Breadth-first closure of ``start`` under the rule, as a validated game.

    Returns ``(game, tokens)`` where ``tokens[i]`` is the token of state ``i``;
    the start token is state 0.
    """
    if max_states < 1:
        raise ValueError("max_states must be at least 1")
    index = {start: 0}
    tokens = [start]
    succ: list[list] = []
    queue = deque([start])
    while queue:
        t = queue.popleft()
        opts = _sorted_tokens(rule.options_of(t))
        for u in opts:
            if u not in index:
                if len(tokens) >= max_states:
                    raise BudgetExceeded(
                        f"reachable fragment from {start!r} exceeds {max_states} states")
                index[u] = len(tokens)
                tokens.append(u)
                queue.append(u)
        succ.append([index[u] for u in opts])
    g = make_game(succ, [_token_name(t) for t in tokens], name or rule.description)
    return validate_well_founded(g), tokens


def _sorted_tokens(tokens):
    try:
        return sorted(tokens)
    except TypeError:
        return sorted(tokens, key=repr)


def _token_name(t):
    if isinstance(t, tuple):
        return "_".join(map(str, t))
    return str(t)


# -- order structure and subgames --------------------------------------------

def descendants(g: Game, sources: Iterable[int]) -> set[int]:
    """All states reachable from ``sources`` by paths of length >= 0."""
    seen = set(sources)
    stack = list(seen)
    while stack:
        x = stack.pop()
        for y in g.options[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def accessible(g: Game, x: int, y: int) -> bool:
    """``x ⪰ y``: a (possibly empty) play leads from x to y."""
    return y in descendants(g, [x])


def is_subgame(g: Game, members: Iterable[int]) -> bool:
    s = set(members)
    return all(y in s for x in s for y in g.options[x])


@dataclass(frozen=True)
class Subgame:
    parent: Game
    members: frozenset[int]

    def __post_init__(self):
        if not is_subgame(self.parent, self.members):
            raise ValueError("members are not closed under moves")

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def as_game(self) -> tuple[Game, "GameMorphism"]:
        """The subgame as a standalone game plus its inclusion morphism."""
        states = sorted(self.members)
        pos = {x: i for i, x in enumerate(states)}
        opts = [[pos[y] for y in self.parent.options[x]] for x in states]
        sub = ensure_validated(make_game(opts, [self.parent.names[x] for x in states],
                                         self.parent.name + "|sub"))
        return sub, GameMorphism(sub, self.parent, tuple(states))


def generated_subgame(g: Game, s: Iterable[int]) -> Subgame:
    return Subgame(g, frozenset(descendants(g, s)))


def cogenerated_subgame(g: Game, s: Iterable[int]) -> Subgame:
    """Largest subgame contained in ``s``: states all of whose descendants lie in ``s``."""
    g = ensure_validated(g)
    s = set(s)
    keep: set[int] = set()
    for x in g.order:
        if x in s and all(y in keep for y in g.options[x]):
            keep.add(x)
    return Subgame(g, frozenset(keep))


# -- morphisms ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GameMorphism:
    source: Game
    target: Game
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __eq__(self, other):
        return (isinstance(other, GameMorphism)
                and self.mapping == other.mapping
                and self.source.same_structure(other.source)
                and self.target.same_structure(other.target))

    def __hash__(self):
        return hash(self.mapping)

    def then(self, other: "GameMorphism") -> "GameMorphism":
        """Composite ``other ∘ self``."""
        if not self.target.same_structure(other.source):
            raise SourceMismatch("composite needs the second morphism to start where the first ends")
        return GameMorphism(self.source, other.target, tuple(other.mapping[y] for y in self.mapping))

    def is_injective(self):
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self):
        return set(self.mapping) == set(self.target.states)


def identity(g: Game) -> GameMorphism:
    return GameMorphism(g, g, tuple(g.states))


def check_morphism(f: Sequence[int] | Mapping[int, int], x_game: Game, y_game: Game) -> GameMorphism:
    """Validate an assignment as a game morphism.

    Both the graph condition (moves map to moves) and path-lifting (every
    move out of an image lifts) are checked; the first violation found in
    ascending state order is raised with its witness edge.
    """
    if isinstance(f, Mapping):
        mapping = tuple(f[x] for x in x_game.states)
    else:
        mapping = tuple(f)
    if len(mapping) != len(x_game):
        raise ValueError("assignment must be total on the source")
    for y in mapping:
        if not 0 <= y < len(y_game):
            raise ValueError(f"assignment hits unknown target state {y}")
    for x in x_game.states:
        fx = mapping[x]
        target_opts = set(y_game.options[fx])
        lifted = set()
        for xp in x_game.options[x]:
            if mapping[xp] not in target_opts:
                raise GraphConditionError((x, xp))
            lifted.add(mapping[xp])
        for y in y_game.options[fx]:
            if y not in lifted:
                raise PathLiftingError((x, y))
    return GameMorphism(x_game, y_game, mapping)


def is_morphism(f, x_game: Game, y_game: Game) -> bool:
    try:
        check_morphism(f, x_game, y_game)
    except (GraphConditionError, PathLiftingError):
        return False
    return True


def image_subgame(f: GameMorphism) -> Subgame:
    return Subgame(f.target, frozenset(f.mapping))


def epi_mono_factorize(f: GameMorphism) -> tuple[GameMorphism, GameMorphism]:
    """Split ``f`` into a surjection onto its image followed by the image inclusion."""
    image, incl = image_subgame(f).as_game()
    pos = {y: i for i, y in enumerate(incl.mapping)}
    epi = check_morphism([pos[y] for y in f.mapping], f.source, image)
    return epi, incl


def inverse_image(f: GameMorphism, s: Subgame) -> Subgame:
    members = frozenset(x for x in f.source.states if f.mapping[x] in s.members)
    return Subgame(f.source, members)
