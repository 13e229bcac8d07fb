"""Command-line surface: sequence generation, solving, verification,
simulation, the prime puzzle, and the play server."""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from wardengame import agents, sequences, solver
from wardengame.core import (
    GoalSpec,
    MultiGoal,
    Position,
    Uniform,
    WardenGameError,
    Word,
    coins_to_position,
    format_position,
    parse_position,
    position_to_coins,
    prime_goal_set,
    validate_position,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wardengame",
        description="Solve and play the warden's rotation game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="print a minimal de Bruijn sequence")
    p.add_argument("--m", type=int, required=True, help="alphabet size")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--format", choices=("plain", "doc"), default="plain")
    p.add_argument(
        "--method",
        choices=("game", "greedy", "fkm"),
        default="game",
        help="game = optimal-play chain of the solved game (default)",
    )

    p = sub.add_parser("chain", help="optimal-play loop for a goal word")
    p.add_argument("--goal", required=True, help="goal word, e.g. 321")

    p = sub.add_parser("remoteness", help="moves the game lasts from a position")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--goal", help="goal word (instead of --m/--n)")
    p.add_argument("--position", required=True)
    p.add_argument("--coins", action="store_true", help="position uses H/T letters")

    p = sub.add_parser("locate", help="window offset in the canonical loop")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("verify", help="cross-check solver against the oracles")
    p.add_argument("--max-states", type=int, default=4096)

    p = sub.add_parser("simulate", help="play two policies against each other")
    p.add_argument("--spec", required=True, help="uniform:M,N | word:DIGITS | prime")
    p.add_argument("--start", required=True)
    p.add_argument("--prisoner", choices=agents.PRISONER_POLICIES, default="optimal")
    p.add_argument("--warden", choices=agents.WARDEN_POLICIES, default="optimal")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--coins", action="store_true")
    p.add_argument("--goal-as-start", action="store_true")

    p = sub.add_parser("puzzle", help="solve a named puzzle")
    p.add_argument("name", choices=("prime",))
    p.add_argument("--start", default="88")
    p.add_argument("--limit", type=int, default=19)

    p = sub.add_parser("serve", help="start the HTTP play server")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", default=None, help="directory of web UI assets")

    return parser


def _parse_spec(text: str) -> GoalSpec:
    text = text.strip()
    if text == "prime":
        return prime_goal_set()
    kind, _, rest = text.partition(":")
    if kind == "uniform":
        m_str, _, n_str = rest.partition(",")
        return Uniform(m=int(m_str), n=int(n_str))
    if kind == "word":
        return Word(goal=parse_position(rest))
    raise WardenGameError(f"unknown spec {text!r} (use uniform:M,N | word:DIGITS | prime)")


def _read_position(text: str, spec: GoalSpec, coins: bool) -> Position:
    if coins:
        if spec.alphabet != 2:
            raise WardenGameError("--coins needs a two-symbol alphabet")
        return coins_to_position(text)
    return validate_position(parse_position(text), spec.alphabet)


def _cmd_generate(args) -> int:
    if args.method == "greedy":
        seq = sequences.greedy_granddaddy(args.m, args.n)
        digits = seq.digits
    elif args.method == "fkm":
        seq = sequences.fkm(args.m, args.n)
        digits = seq.digits
    else:
        chain = solver.build_chain(solver.solve(Uniform(args.m, args.n)))
        digits = chain.digits
    if args.format == "doc":
        doc = {"m": args.m, "n": args.n, "digits": list(digits), "canonical": True}
        print(json.dumps(doc, sort_keys=True))
    else:
        print(format_position(digits, args.m))
    return 0


def _cmd_chain(args) -> int:
    goal = parse_position(args.goal)
    chain = solver.build_chain(solver.solve(Word(goal)))
    print(chain.display())
    return 0


def _cmd_remoteness(args) -> int:
    if args.goal is not None:
        spec: GoalSpec = Word(parse_position(args.goal))
    elif args.m is not None and args.n is not None:
        spec = Uniform(args.m, args.n)
    else:
        raise WardenGameError("give either --goal or both --m and --n")
    if args.coins:
        position = coins_to_position(args.position)
    else:
        position = parse_position(args.position)
    if len(position) != spec.n:
        raise WardenGameError("position length does not match the spec")
    # Digits above the word alphabet sit outside the solved table but are
    # simply unwinnable (no rotation can fit under the goal).
    if any(d >= spec.alphabet for d in position):
        print("unwinnable")
        return 0
    table = solver.solve(spec)
    r = table.remoteness(position)
    print("unwinnable" if r == solver.UNWINNABLE else r)
    return 0


def _cmd_locate(args) -> int:
    word = parse_position(args.word, alphabet=args.m)
    table = solver.solve(Uniform(args.m, args.n))
    chain = solver.build_chain(table)
    by_scan = sequences.locate(word, chain)
    by_table = sequences.locate(word, table)
    if by_scan != by_table:
        raise WardenGameError(
            f"sequence scan ({by_scan}) and remoteness arithmetic ({by_table}) disagree"
        )
    print(by_scan)
    return 0


def _verify_pairs(max_states: int) -> list[tuple[int, int]]:
    # n = 1 capped at m <= 64 and m = 1 at n <= 12: past those the games are
    # structurally identical and the n = 1 tail alone is quadratic in m.
    pairs: list[tuple[int, int]] = []
    top = max(64, math.isqrt(max_states))
    for m in range(1, top + 1):
        if m == 1:
            pairs.extend((1, n) for n in range(1, 13))
            continue
        n = 1
        while m**n <= max_states:
            if not (n == 1 and m > 64):
                pairs.append((m, n))
            n += 1
    return pairs


def _cmd_verify(args) -> int:
    failures = []
    checked = 0
    for m, n in _verify_pairs(args.max_states):
        table = solver.solve(Uniform(m, n))
        chain = solver.build_chain(table)
        greedy = sequences.greedy_granddaddy(m, n)
        lyndon = sequences.fkm(m, n)
        if not (chain.digits == greedy.digits == lyndon.digits):
            failures.append(f"({m},{n}) oracle mismatch")
        if not sequences.is_de_bruijn(chain.digits, m, n):
            failures.append(f"({m},{n}) chain is not a de Bruijn loop")
        if not solver.verify_single_chain(table):
            failures.append(f"({m},{n}) single-chain structure broken")
        if not _monotone(table):
            failures.append(f"({m},{n}) last-digit monotonicity broken")
        checked += 1
    print(f"checked {checked} specs up to {args.max_states} states")
    for line in failures:
        print(f"FAIL {line}", file=sys.stderr)
    return 1 if failures else 0


def _monotone(table: solver.RemotenessTable) -> bool:
    """Larger rightmost digits never shorten the game (goal read as a start)."""
    values = table.values
    alphabet = table.alphabet
    size = table.size
    goal_idx = None
    if table.goal_as_start is not None:
        from wardengame.core import encode, goal_words

        (goal,) = goal_words(table.spec)
        goal_idx = encode(goal, alphabet)

    def effective(idx: int) -> float:
        if idx == goal_idx:
            return table.goal_as_start
        v = int(values[idx])
        return float("inf") if v == solver.UNWINNABLE else v

    for base in range(0, size, alphabet):
        previous = effective(base)
        for d in range(1, alphabet):
            current = effective(base + d)
            if current < previous:
                return False
            previous = current
    return True


def _cmd_simulate(args) -> int:
    spec = _parse_spec(args.spec)
    start = _read_position(args.start, spec, args.coins)
    table_cache: dict[str, solver.RemotenessTable] = {}

    def table() -> solver.RemotenessTable:
        if "t" not in table_cache:
            table_cache["t"] = solver.solve(spec)
        return table_cache["t"]

    prisoner = agents.make_prisoner_policy(args.prisoner, table_provider=table)
    warden = agents.make_warden_policy(
        args.warden, table_provider=table, seed=args.seed
    )
    transcript = agents.simulate(
        spec, start, prisoner, warden, cap=args.cap, goal_as_start=args.goal_as_start
    )
    for line in transcript.to_lines():
        print(line)
    return 0


def _cmd_puzzle(args) -> int:
    spec = prime_goal_set(limit=args.limit)
    start = validate_position(parse_position(args.start), spec.alphabet)
    if len(start) != spec.n:
        raise WardenGameError("the prime puzzle uses two digits")
    table = solver.solve(spec)
    verdict = solver.bounded_win(start, spec, table=table)
    independent = solver.minimax_bounded(start, spec, spec.limit)
    if (verdict.moves if verdict.winnable else None) != independent:
        raise WardenGameError(
            f"remoteness table ({verdict}) and depth-limited minimax "
            f"({independent}) disagree"
        )
    rendered = format_position(start, spec.alphabet)
    print(f"start {rendered}  limit {spec.limit}")
    if verdict.winnable:
        print(f"verdict: winnable in {verdict.moves} moves")
        if verdict.moves == 0:
            print("first move: none (already showing a prime)")
        else:
            move = solver.optimal_move(start, table)
            print(f"first move: {move.actor.value} writes {move.value}")
    else:
        r = table.remoteness(start)
        if r == solver.UNWINNABLE:
            print("verdict: unwinnable under any move budget")
        else:
            print(f"verdict: not winnable within {spec.limit} moves (needs {r})")
    print("cross-check: depth-limited minimax agrees")
    return 0


def _cmd_serve(args) -> int:
    from wardengame.server import run_server

    run_server(port=args.port, static_dir=args.static)
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "chain": _cmd_chain,
    "remoteness": _cmd_remoteness,
    "locate": _cmd_locate,
    "verify": _cmd_verify,
    "simulate": _cmd_simulate,
    "puzzle": _cmd_puzzle,
    "serve": _cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except WardenGameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
