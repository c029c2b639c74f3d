"""Command-line interface.

Games are given as a file path or a generator expression::

    nim:3,4,5   sub:<n>:<s1>,<s2>,...   elm:<n>   binexp:<n>   star:<n>   code:<natural>

Exit status is 0 on success, 1 on a domain error (invalid game, failed
check, unstable approximation) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generators
from .bouton import bouton_approximation
from .errors import DepthGuardError, GameError
from .fileio import export_dot, format_game_file, parse_game_file
from .game import check_morphism
from .hfs import HfsArena, xi_reduce
from .play import run_play_loop
from .sums import game_sum
from .universal import count_homs, product, quotient_coequalizer
from .values import format_value, get_algebra, hylo_eval
from .verify import SUITES, run_suite

MAX_GENERATOR_PARAM = 10_000


class UsageError(Exception):
    pass


def _ints(text, what):
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad {what}: {text!r}") from None
    if any(v < 0 for v in vals):
        raise UsageError(f"{what} must be non-negative")
    return vals


def _one_int(text, what):
    vals = _ints(text, what)
    if len(vals) != 1:
        raise UsageError(f"{what} must be a single natural number")
    return vals[0]


def _algebra(name):
    try:
        return get_algebra(name)
    except KeyError as e:
        raise UsageError(e.args[0]) from None


def load_game(spec: str):
    """Resolve a game specifier (generator expression or file path)."""
    kind, sep, rest = spec.partition(":")
    if sep and kind in ("nim", "sub", "elm", "binexp", "star", "code"):
        if kind == "nim":
            heaps = _ints(rest, "heap sizes")
            if not heaps or max(heaps) > 64:
                raise UsageError("nim needs 1+ heaps of size <= 64")
            return generators.nim(*heaps)
        if kind == "sub":
            n, sep2, subs = rest.partition(":")
            if not sep2:
                raise UsageError("sub:<n>:<s1>,<s2>,...")
            start = _one_int(n, "start")
            subs = _ints(subs, "subtraction set")
            if start > MAX_GENERATOR_PARAM or not subs or min(subs) < 1:
                raise UsageError("sub needs a start <= 10000 and positive subtractions")
            return generators.subtraction(start, subs)
        n = _one_int(rest, kind)
        if kind == "code":
            arena = HfsArena()
            g, _ = arena.as_game([arena.decode(n)])
            return g
        if n > MAX_GENERATOR_PARAM:
            raise UsageError(f"{kind} parameter must be <= {MAX_GENERATOR_PARAM}")
        return {"elm": generators.elm, "binexp": generators.binexp, "star": generators.star}[kind](n)
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"no such game file or generator: {spec}")
    return parse_game_file(path.read_text(encoding="utf-8"))


def _state(g, name):
    try:
        return g.index(name)
    except KeyError:
        raise UsageError(f"game has no state {name!r}") from None


def _read_pairs(path, x_game, y_game):
    pairs = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if len(line) != 2:
            raise UsageError(f"{path}:{lineno}: expected two state names")
        pairs.append((_state(x_game, line[0]), _state(y_game, line[1])))
    return pairs


def _hfs_text(arena, h):
    try:
        return f"{arena.format(h)} code={arena.encode(h)}"
    except DepthGuardError:
        return arena.format(h)


def cmd_check(args, out):
    g = load_game(args.game)
    out.write(f"ok: {len(g)} states, {g.edge_count} moves\n")


def cmd_value(args, out):
    g = load_game(args.game)
    alg = _algebra(args.alg)
    for x, v in enumerate(hylo_eval(g, alg)):
        out.write(f"{g.names[x]} {format_value(v)}\n")


def cmd_xi(args, out):
    g = load_game(args.game)
    arena = HfsArena()
    for x, h in enumerate(xi_reduce(arena, g)):
        out.write(f"{g.names[x]} {_hfs_text(arena, h)}\n")


def cmd_code(args, out):
    g = load_game(args.game)
    arena = HfsArena()
    for x, h in enumerate(xi_reduce(arena, g)):
        out.write(f"{g.names[x]} {arena.encode(h)}\n")


def cmd_sum(args, out):
    s = game_sum(args.kind, load_game(args.x), load_game(args.y))
    out.write(f"# {len(s)} states, {s.edge_count} moves\n")
    out.write(format_game_file(s))


def cmd_morphism(args, out):
    x_game, y_game = load_game(args.x), load_game(args.y)
    pairs = dict(_read_pairs(args.map, x_game, y_game))
    missing = [x_game.names[x] for x in x_game.states if x not in pairs]
    if missing:
        raise UsageError(f"map is not total; missing {', '.join(missing)}")
    check_morphism(pairs, x_game, y_game)
    out.write("valid game morphism\n")


def cmd_product(args, out):
    p = product(load_game(args.x), load_game(args.y), args.budget)
    out.write(f"# {len(p)} states; level profile {' '.join(map(str, p.level_profile()))}\n")
    out.write(format_game_file(p.game))


def cmd_homcount(args, out):
    out.write(f"{count_homs(load_game(args.x), load_game(args.y))}\n")


def cmd_quotient(args, out):
    g = load_game(args.game)
    q = quotient_coequalizer(g, _read_pairs(args.pairs, g, g))
    out.write(f"# {len(q.quotient)} classes\n")
    out.write(format_game_file(q.quotient))


def cmd_bouton(args, out):
    approx = bouton_approximation(args.kind, _algebra(args.alg), args.k, args.d)
    arena = approx.arena
    out.write(f"kind {approx.kind.tag}, value {approx.value.name}, k={approx.k}, d={approx.d}\n")
    out.write(f"classes {len(approx.classes)}\n")
    for i, members in enumerate(approx.classes):
        codes = " ".join(str(arena.encode(z)) for z in members)
        out.write(f"  class {i}: value {format_value(approx.a[i])}; codes {codes}\n")
    out.write("table\n")
    for row in approx.table:
        out.write("  " + " ".join("?" if c is None else str(c) for c in row) + "\n")
    out.write(f"stable {str(approx.stable).lower()}\n")
    if not approx.stable:
        x, y = approx.witness
        out.write(f"witness {arena.encode(x)} {arena.encode(y)}\n")
        return 1
    return 0


def cmd_verify(args, out):
    checks = run_suite(args.suite)
    for c in checks:
        out.write(c.line() + "\n")
    return 0 if all(c.passed for c in checks) else 1


def cmd_dot(args, out):
    g = load_game(args.game)
    ann = hylo_eval(g, _algebra(args.alg)) if args.alg else None
    out.write(export_dot(g, ann))


def cmd_play(args, out):
    g = load_game(args.game)
    start = _state(g, args.start) if args.start is not None else 0
    run_play_loop(g, start, sys.stdin, out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hylogame", description="Impartial games as recursive coalgebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def one(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("game")
        sp.set_defaults(fn=fn)
        return sp

    def two(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("x")
        sp.add_argument("y")
        sp.set_defaults(fn=fn)
        return sp

    one("check", cmd_check, "validate a game")
    one("value", cmd_value, "evaluate a value algebra").add_argument("--alg", required=True)
    one("xi", cmd_xi, "map states to hereditarily finite sets")
    one("code", cmd_code, "Ackermann code of every state")
    two("sum", cmd_sum, "sum of two games").add_argument(
        "--kind", choices=["conway", "selective", "conjunctive"], default="conway")
    two("morphism", cmd_morphism, "check a state map is a game morphism").add_argument("--map", required=True)
    two("product", cmd_product, "categorical product").add_argument("--budget", type=int, default=10**6)
    two("homcount", cmd_homcount, "count game morphisms")
    one("quotient", cmd_quotient, "quotient by identified pairs").add_argument("--pairs", required=True)
    b = sub.add_parser("bouton", help="bounded Bouton monoid approximation")
    b.add_argument("--kind", choices=["conway", "selective", "conjunctive"], default="conway")
    b.add_argument("--alg", default="np")
    b.add_argument("--k", type=int, default=3)
    b.add_argument("--d", type=int, default=3)
    b.set_defaults(fn=cmd_bouton)
    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.set_defaults(fn=cmd_verify)
    one("dot", cmd_dot, "Graphviz export").add_argument("--alg")
    one("play", cmd_play, "play against the engine").add_argument("--start")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args, out) or 0
    except (UsageError, OSError) as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2
    except GameError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
