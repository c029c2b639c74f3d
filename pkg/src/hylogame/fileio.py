"""Plain-text game files and Graphviz DOT export.

Game file grammar (UTF-8, one declaration per line)::

    # comment
    game <name>
    state : succ succ ...

Identifiers match ``[A-Za-z0-9_()-]+``.  Successors that are never declared
become terminal states.  Declaring a state twice is an error.
"""
from __future__ import annotations

import re

from .errors import GameFileError, WellFoundednessError
from .game import Game, build_finite_game, ensure_validated, validate_well_founded
from .values import Outcome, RemotenessValue, format_value

IDENT = re.compile(r"[A-Za-z0-9_()-]+\Z")


def parse_game_file(text: str) -> Game:
    name = ""
    spec: list[tuple[str, list[str]]] = []
    declared: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("game ") or line == "game":
            if spec or name:
                raise GameFileError(lineno, "'game' header must come first and only once")
            name = line[4:].strip()
            continue
        if ":" not in line:
            raise GameFileError(lineno, "expected 'state : successors'")
        head, _, tail = line.partition(":")
        state = head.strip()
        if not IDENT.match(state):
            raise GameFileError(lineno, f"bad state identifier {state!r}")
        succ = tail.split()
        for s in succ:
            if not IDENT.match(s):
                raise GameFileError(lineno, f"bad successor identifier {s!r}")
        if state in declared:
            raise GameFileError(lineno, f"state {state!r} already declared on line {declared[state]}")
        declared[state] = lineno
        spec.append((state, succ))
    g = build_finite_game(spec, name)
    try:
        return validate_well_founded(g)
    except WellFoundednessError as e:
        names = [g.names[x] for x in e.cycle]
        raise WellFoundednessError(e.cycle, f"cycle through states {' -> '.join(names)}") from None


def _file_names(g: Game) -> list[str]:
    names = list(g.names)
    if len(set(names)) != len(names) or not all(IDENT.match(n) for n in names):
        names = [f"s{i}" for i in g.states]
    return names


def format_game_file(g: Game) -> str:
    """Serialize ``g``; every state is declared, in index order.

    Names that are not valid identifiers (or collide) are replaced by
    ``s<index>`` for all states.
    """
    names = _file_names(g)
    lines = []
    if g.name:
        lines.append(f"game {g.name}")
    for x in g.states:
        succ = " ".join(names[y] for y in g.options[x])
        lines.append(f"{names[x]} : {succ}".rstrip())
    return "\n".join(lines) + "\n"


_COLOURS = {Outcome.P: "blue", Outcome.N: "red"}


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: Game, annotations=None) -> str:
    """DOT digraph with states in index order.

    ``annotations`` is an optional per-state value list; outcome-like values
    (N/P, remoteness) also colour the node, P blue and N red.
    """
    g = ensure_validated(g)
    lines = [f'digraph "{_dot_escape(g.name)}" {{']
    for x in g.states:
        attrs = []
        label = _dot_escape(g.names[x])
        if annotations is not None:
            v = annotations[x]
            label += "\\n" + _dot_escape(format_value(v))
            tag = v.tag if isinstance(v, RemotenessValue) else v
            if isinstance(tag, Outcome):
                attrs.append(f'color="{_COLOURS[tag]}"')
        attrs.insert(0, f'label="{label}"')
        lines.append(f"  {x} [{', '.join(attrs)}];")
    for x, y in g.edges():
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
