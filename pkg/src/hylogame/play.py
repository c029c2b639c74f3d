"""A text loop where a human plays first against an outcome-driven engine."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

from .game import Game, ensure_validated
from .values import P, grundy, outcome


@dataclass
class PlayTranscript:
    lines: list[str] = field(default_factory=list)
    moves: list[tuple[str, int]] = field(default_factory=list)
    loser: str | None = None
    aborted: bool = False


def engine_move(g: Game, state: int, outcomes=None) -> int:
    """Lowest-index option that is a P-state, else the lowest-index option."""
    outcomes = outcomes or outcome(g)
    opts = g.options[state]
    for y in opts:
        if outcomes[y] is P:
            return y
    return opts[0]


def run_play_loop(g: Game, start: int, inp: TextIO, out: TextIO) -> PlayTranscript:
    g = ensure_validated(g)
    if not 0 <= start < len(g):
        raise ValueError(f"no state {start}")
    outs, gr = outcome(g), grundy(g)
    tr = PlayTranscript()

    def say(msg):
        tr.lines.append(msg)
        out.write(msg + "\n")

    def describe(x):
        return f"{g.names[x]} ({outs[x]}, grundy {gr[x]})"

    state, player = start, "human"
    while True:
        say(f"state {describe(state)}, {player} to move")
        opts = g.options[state]
        if not opts:
            tr.loser = player
            say(f"{player} has no move and loses")
            return tr
        if player == "human":
            for i, y in enumerate(opts):
                say(f"  [{i}] {describe(y)}")
            while True:
                out.write("move> ")
                line = inp.readline()
                if not line:
                    tr.aborted = True
                    say("input closed; game aborted")
                    return tr
                try:
                    choice = int(line.strip())
                except ValueError:
                    choice = -1
                if 0 <= choice < len(opts):
                    break
                say(f"enter an index between 0 and {len(opts) - 1}")
            nxt = opts[choice]
        else:
            nxt = engine_move(g, state, outs)
            say(f"engine moves to {describe(nxt)}")
        tr.moves.append((player, nxt))
        state = nxt
        player = "engine" if player == "human" else "human"
