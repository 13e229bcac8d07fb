"""Acceptance gate: one test per release criterion.

Golden strings and orderings are frozen constants, checked byte for byte;
everything tagged "derived" is computed by an independent oracle living in
oracles.py or by exhaustive search, never assumed.  Runtime limits are part
of the criteria and asserted.
"""

from __future__ import annotations

import random
import time

import numpy as np
import pytest

from oracles import value_iteration_remoteness
from wardengame.cli import _verify_pairs, main as cli_main
from wardengame.core import (
    MultiGoal,
    Uniform,
    Word,
    decode,
    encode,
    goal_words,
    prime_goal_set,
    rotation_dominates,
)
from wardengame.agents import WorstCaseSearch
from wardengame.sequences import enumerate_all, fkm, greedy_granddaddy
from wardengame.solver import (
    UNWINNABLE,
    bounded_win,
    build_chain,
    load_table,
    minimax_bounded,
    save_table,
    solve,
    verify_single_chain,
)

DICE_3x3_LOOP = "(222)000100201101202102211121222"
DICE_3x3_ORDER = [
    "222", "220", "200", "000", "001", "010", "100", "002", "020", "201",
    "011", "110", "101", "012", "120", "202", "021", "210", "102", "022",
    "221", "211", "111", "112", "121", "212", "122", "222",
]
GOAL_WORD_LOOPS = {
    (3, 2, 1): "(321)00010110200211120121220221300301310311320321",
    (1, 3, 2): "(132)00010020110120210220300310321112122130131132",
    (2, 1, 3): "(213)00010020030110120131021031112113202203212213",
}

GAMUT_4096 = _verify_pairs(4096)


@pytest.fixture(scope="module")
def gamut_tables():
    """Solved table + chain for every (m, n) in the 4096-state gamut."""
    out = {}
    for m, n in GAMUT_4096:
        table = solve(Uniform(m, n))
        out[(m, n)] = (table, build_chain(table))
    return out


def test_golden_chain_for_three_by_three(solved):
    started = time.perf_counter()
    table = solve(Uniform(3, 3))
    chain = build_chain(table)
    elapsed = time.perf_counter() - started
    assert chain.display() == DICE_3x3_LOOP
    ordering = ["".join(map(str, p)) for p in table.positions_by_remoteness()]
    ordering.append("".join(map(str, (2, 2, 2))))  # the goal closes the loop
    assert ordering == DICE_3x3_ORDER
    assert table.goal_as_start == 27
    assert elapsed < 1.0


def test_golden_sequence_rank_four_binary():
    started = time.perf_counter()
    chain = build_chain(solve(Uniform(2, 4)))
    greedy = greedy_granddaddy(2, 4)
    lyndon = fkm(2, 4)
    elapsed = time.perf_counter() - started
    assert str(chain) == "0000100110101111"
    assert chain.digits == greedy.digits == lyndon.digits
    assert elapsed < 1.0


def test_oracle_equivalence_across_the_gamut(gamut_tables):
    started = time.perf_counter()
    for (m, n), (_, chain) in gamut_tables.items():
        assert chain.digits == greedy_granddaddy(m, n).digits == fkm(m, n).digits, (
            f"oracles disagree at (m={m}, n={n})"
        )
    elapsed = time.perf_counter() - started
    assert len(gamut_tables) >= 80
    assert (16, 3) in gamut_tables and (2, 12) in gamut_tables
    assert elapsed < 30.0


def test_minimality_certified_by_exhaustive_enumeration(gamut_tables):
    for m, n, count in [(2, 4, 16), (2, 3, 2)]:
        everything = enumerate_all(m, n)
        assert len(everything) == count
        _, chain = gamut_tables[(m, n)]
        assert min(s.digits for s in everything) == chain.digits
        assert everything[0].digits == chain.digits


def test_single_chain_structure_across_the_gamut(gamut_tables):
    for (m, n), (table, _) in gamut_tables.items():
        assert verify_single_chain(table), f"single chain broken at (m={m}, n={n})"
        assert table.goal_as_start == m**n
        # the maximum belongs to the all-(m-1) position read as a start
        assert int(table.values.max()) == m**n - 1


def test_larger_last_digits_never_shorten_the_game(gamut_tables):
    for (m, n), (table, _) in gamut_tables.items():
        effective = table.values.astype(np.int64).copy()
        effective[table.size - 1] = table.goal_as_start  # goal read as a start
        rows = effective.reshape(table.size // m, m)
        assert np.all(np.diff(rows, axis=1) > 0), f"monotonicity broken at ({m},{n})"
    table, _ = gamut_tables[(3, 3)]
    r220 = table.remoteness((2, 2, 0))
    r221 = table.remoteness((2, 2, 1))
    assert r220 < r221 < table.goal_as_start


def test_goal_word_loops_match_the_goldens(solved):
    chains = {}
    for goal, expected in GOAL_WORD_LOOPS.items():
        chain = build_chain(solved(Word(goal)))
        assert chain.display() == expected, f"loop for goal {goal} is off"
        chains[goal] = chain
    window_sets = [set(c.windows()) for c in chains.values()]
    assert window_sets[0] == window_sets[1] == window_sets[2]


def test_winnability_is_exactly_rotation_dominance():
    rng = random.Random(20260808)
    goals = []
    while len(goals) < 50:
        n = rng.randint(1, 3)
        goal = tuple(rng.randint(0, 4) for _ in range(n))
        goals.append(goal)
    for goal in goals:
        table = solve(Word(goal))
        for idx in range(table.size):
            p = decode(idx, table.alphabet, table.n)
            finite = table.remoteness(p) != UNWINNABLE
            assert finite == rotation_dominates(p, goal), (goal, p)
    table = solve(Word((3, 1, 4)))
    assert table.remoteness((0, 4, 2)) != UNWINNABLE
    assert table.remoteness((4, 0, 2)) == UNWINNABLE


def test_basic_strategy_bound():
    # the classic walkthrough start: the blind strategy may need up to 75
    # moves, optimal play far fewer
    spec = Uniform(2, 5)
    start = (0, 1, 1, 1, 0)
    worst = WorstCaseSearch(spec, "basic").length(start)
    assert worst <= 75
    assert solve(spec).remoteness(start) < worst
    # and from every start of every spec within 256 states, the basic
    # strategy beats exhaustive warden opposition within n * m**n transfers
    for m, n in _verify_pairs(256):
        search = WorstCaseSearch(Uniform(m, n), "basic")
        bound = n * m**n
        for idx in range(m**n):
            assert search.length(decode(idx, m, n)) <= bound, (m, n, idx)


def test_solver_matches_exhaustive_minimax_on_small_specs():
    specs = [Uniform(m, n) for m, n in _verify_pairs(512)]
    specs += [Word((3, 1, 4)), Word((3, 2, 1)), Word((1, 0, 2, 1)), Word((0, 0))]
    rng = random.Random(99)
    while sum(isinstance(s, MultiGoal) for s in specs) < 5:
        alphabet = rng.randint(2, 8)
        n = rng.randint(1, 3)
        if alphabet**n > 512:
            continue
        size = alphabet**n
        count = rng.randint(1, min(6, size))
        goals = frozenset(
            decode(rng.randrange(size), alphabet, n) for _ in range(count)
        )
        limit = rng.choice([None, rng.randint(0, 30)])
        specs.append(MultiGoal(alphabet=alphabet, n=n, goals=goals, limit=limit))
    for spec in specs:
        expected = value_iteration_remoteness(spec)
        assert np.array_equal(solve(spec).values, expected), spec


def test_prime_puzzle_is_deterministic_and_cross_checked(capsys):
    started = time.perf_counter()
    outputs = []
    for _ in range(3):
        assert cli_main(["puzzle", "prime"]) == 0
        outputs.append(capsys.readouterr().out)
    elapsed = time.perf_counter() - started
    assert outputs[0] == outputs[1] == outputs[2]
    assert "cross-check: depth-limited minimax agrees" in outputs[0]
    # the two independent methods must answer the puzzle alike
    spec = prime_goal_set()
    table = solve(spec)
    verdict = bounded_win((8, 8), spec, table=table)
    independent = minimax_bounded((8, 8), spec, spec.limit)
    assert verdict.winnable == (independent is not None)
    if verdict.winnable:
        assert verdict.moves == independent
        assert f"winnable in {verdict.moves} moves" in outputs[0]
    assert elapsed < 1.0


def test_cache_round_trip_is_byte_stable(tmp_path):
    for spec in [Uniform(3, 3), prime_goal_set()]:
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        table = solve(spec)
        save_table(table, first)
        save_table(solve(spec), second)  # a fresh solve, not the same object
        assert first.read_bytes() == second.read_bytes()
        loaded = load_table(first)
        assert loaded.spec == table.spec
        assert loaded.goal_as_start == table.goal_as_start
        assert np.array_equal(loaded.values, table.values)
