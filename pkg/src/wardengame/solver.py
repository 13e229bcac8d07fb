"""Exact game solving: remoteness tables, optimal moves, and the play chain.

Remoteness of a position is the total number of transfers the game lasts
from there when the prisoner plays to finish as fast as possible and the
warden to stall as long as possible.  For a non-goal position whose
rightmost digit is v it satisfies

    r(p) = 1 + max( max over w < v of r(child_w),
                    min over u >= v of r(child_u) )

where child_d is the position after transferring the rightmost item with
value d written on it.  The warden owns the outer max (his write options
plus the option of passing); a pass hands the inner min to the prisoner.
An unwinnable operand anywhere in the warden's max poisons the position;
the prisoner's min ignores unwinnable options unless there is nothing else.

Goal positions are terminal with r = 0 inside the table.  The goal *as a
starting position* ("win by coming back") gets the separate goal_as_start
value, computed by evaluating the same recurrence once at the goal.

For single-goal specs the solved game is one closed path: exactly one
position per remoteness value, and the table compresses to a loop of
digits whose length-n windows enumerate the winnable positions.  In the
uniform case that loop is the lexicographically minimal de Bruijn
sequence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from wardengame import kernels
from wardengame.core import (
    Actor,
    GoalSpec,
    MoveChoice,
    MultiGoal,
    Position,
    Uniform,
    WardenGameError,
    decode,
    encode,
    format_position,
    goal_words,
    spec_from_doc,
    spec_to_doc,
    validate_position,
)

UNWINNABLE = -1

CACHE_FORMAT_VERSION = 1

DEFAULT_STATE_CAP = 10**8


class StateSpaceTooLarge(WardenGameError):
    """The dense table would exceed the configured entry cap."""


class NoWinPath(WardenGameError):
    """Asked for an optimal move out of an unwinnable position."""


class ChainBroken(WardenGameError):
    """The solved table does not form a single overlapping chain (solver bug)."""


@dataclass(frozen=True)
class RemotenessTable:
    """Dense map position -> remoteness for one goal spec.

    `values[encode(p)]` is the remoteness of p, or -1 (UNWINNABLE).
    `goal_as_start` is the remoteness of the goal treated as a start
    (None for MultiGoal specs, where that reading is undefined).
    """

    spec: GoalSpec
    values: np.ndarray
    goal_as_start: int | None

    @property
    def alphabet(self) -> int:
        return self.spec.alphabet

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    @property
    def winnable_count(self) -> int:
        return int(np.count_nonzero(self.values >= 0))

    def remoteness(self, p: Position) -> int:
        p = validate_position(p, self.alphabet)
        if len(p) != self.n:
            raise ValueError(f"position length {len(p)} != spec length {self.n}")
        return int(self.values[encode(p, self.alphabet)])

    def is_winnable(self, p: Position) -> bool:
        return self.remoteness(p) != UNWINNABLE

    def positions_by_remoteness(self) -> Iterator[Position]:
        """Winnable positions in increasing remoteness order (stable on ties)."""
        finite = np.flatnonzero(self.values >= 0)
        order = finite[np.argsort(self.values[finite], kind="stable")]
        for idx in order:
            yield decode(int(idx), self.alphabet, self.n)


def solve(spec: GoalSpec, *, state_cap: int = DEFAULT_STATE_CAP) -> RemotenessTable:
    """Solve a spec exactly: remoteness for all alphabet**n positions.

    Refuses state spaces above `state_cap` entries (default 1e8).  The
    heavy loop runs in the compiled kernel when built; the result is
    identical either way and deterministic.
    """
    alphabet, n = spec.alphabet, spec.n
    size = alphabet**n
    if size > state_cap:
        raise StateSpaceTooLarge(
            f"{alphabet}**{n} = {size} positions exceeds the cap of {state_cap}"
        )
    goal_idx = sorted(encode(g, alphabet) for g in goal_words(spec))
    values = kernels.solve_dense(alphabet, n, goal_idx)
    table = RemotenessTable(spec=spec, values=values, goal_as_start=None)
    if isinstance(spec, MultiGoal):
        return table
    gas = recompute_remoteness(spec.goal, table)
    if gas == UNWINNABLE:
        raise ChainBroken("goal-as-start came out unwinnable")
    return RemotenessTable(spec=spec, values=values, goal_as_start=gas)


def recompute_remoteness(p: Position, table: RemotenessTable) -> int:
    """Evaluate the remoteness recurrence at p from the children's stored
    values, ignoring p's own entry.

    At a non-goal position this must reproduce the stored value (the tests
    lean on that); at the goal it yields the goal-as-start remoteness.
    """
    alphabet = table.alphabet
    v = p[-1]
    rest = p[:-1]
    child_r = [table.remoteness((d,) + rest) for d in range(alphabet)]
    if any(r == UNWINNABLE for r in child_r[:v]):
        return UNWINNABLE
    finite_prisoner = [r for r in child_r[v:] if r != UNWINNABLE]
    if not finite_prisoner:
        return UNWINNABLE
    pass_value = min(finite_prisoner)
    best = max(child_r[:v] + [pass_value])
    return best + 1


def goal_as_start_remoteness(table: RemotenessTable) -> int:
    """Remoteness of the goal when a win means returning to it after at
    least one move.  Uniform specs always give m**n here."""
    if table.goal_as_start is None:
        raise ValueError("goal-as-start remoteness is not defined for MultiGoal specs")
    return table.goal_as_start


def optimal_move(p: Position, table: RemotenessTable) -> MoveChoice:
    """The move optimal play makes at p: to the child one remoteness level
    down.

    At the goal of a single-goal spec the goal-as-start reading applies.
    Ties (possible only for MultiGoal) resolve to the smallest written
    value, which also prefers a warden write over a pass.
    """
    spec = table.spec
    r = table.remoteness(p)
    if r == UNWINNABLE:
        raise NoWinPath(f"{format_position(p, table.alphabet)} cannot be won")
    if r == 0:
        if table.goal_as_start is None:
            raise ValueError("already at a goal; MultiGoal has no goal-as-start reading")
        r = table.goal_as_start

    alphabet = table.alphabet
    v = p[-1]
    rest = p[:-1]
    child_r = [table.remoteness((d,) + rest) for d in range(alphabet)]
    target = r - 1

    candidates = [w for w in range(v) if child_r[w] == target]
    finite_prisoner = [x for x in child_r[v:] if x != UNWINNABLE]
    if finite_prisoner and min(finite_prisoner) == target:
        candidates.extend(u for u in range(v, alphabet) if child_r[u] == target)
    if not candidates:
        raise ChainBroken(
            f"no child of {format_position(p, alphabet)} has remoteness {target}"
        )
    value = min(candidates)
    actor = Actor.WARDEN if value < v else Actor.PRISONER
    return MoveChoice(actor, value)


@dataclass(frozen=True)
class ChainSequence:
    """The optimal-play loop of a solved single-goal game.

    `digits` holds the canonical rotation (the one starting with the
    all-zero window).  Window offsets are cyclic; the window at offset
    (goal_offset + k) mod L is the unique position of remoteness k, so
    reading from the goal window walks the chain in increasing remoteness.
    """

    digits: tuple[int, ...]
    n: int
    alphabet: int
    goal_offset: int

    @property
    def length(self) -> int:
        return len(self.digits)

    def window_at(self, offset: int) -> Position:
        L = self.length
        return tuple(self.digits[(offset + i) % L] for i in range(self.n))

    def windows(self) -> Iterator[Position]:
        for k in range(self.length):
            yield self.window_at(k)

    def remoteness_of_offset(self, offset: int) -> int:
        return (offset - self.goal_offset) % self.length

    def __str__(self) -> str:
        return format_position(self.digits, self.alphabet)

    def display(self) -> str:
        """Loop rendering with the wrapped goal window shown in parentheses
        up front, e.g. "(222)000100201101202102211121222"."""
        L = self.length
        lead = tuple(self.digits[(L - self.n + i) % L] for i in range(self.n))
        return f"({format_position(lead, self.alphabet)}){self}"


def build_chain(table: RemotenessTable) -> ChainSequence:
    """Compress a solved single-goal table into its loop of digits.

    Orders the winnable positions by remoteness, verifies every
    consecutive pair overlaps in n-1 digits (a failed check means a solver
    bug, reported as ChainBroken), and emits one digit per position.
    """
    if isinstance(table.spec, MultiGoal):
        raise ValueError("chains exist only for single-goal specs")
    positions = list(table.positions_by_remoteness())
    L = len(positions)
    finite = np.sort(table.values[table.values >= 0])
    if not np.array_equal(finite, np.arange(L)):
        raise ChainBroken("remoteness values are not exactly 0..L-1, one each")
    if table.goal_as_start != L:
        raise ChainBroken(
            f"goal-as-start is {table.goal_as_start}, expected the loop length {L}"
        )
    n = table.n
    for k in range(L):
        q = positions[k]
        nxt = positions[(k + 1) % L]
        if q[1:] != nxt[: n - 1]:
            raise ChainBroken(
                f"windows {q} -> {nxt} do not overlap in {n - 1} digits"
            )
    loop = tuple(q[0] for q in positions)
    # encode((0,)*n) == 0, so values[0] is the all-zero window's remoteness.
    zero_r = int(table.values[0])
    if zero_r < 0:
        raise ChainBroken("the all-zero position must be winnable")
    canonical = loop[zero_r:] + loop[:zero_r]
    return ChainSequence(
        digits=canonical,
        n=n,
        alphabet=table.alphabet,
        goal_offset=(L - zero_r) % L,
    )


def verify_single_chain(table: RemotenessTable) -> bool:
    """Check the one-position-per-remoteness structure of a single-goal
    game: finite values are exactly {0..L-1} with one position each and the
    goal-as-start tops them all at L (= m**n for uniform specs)."""
    if isinstance(table.spec, MultiGoal):
        raise ValueError("single-chain structure is defined for single-goal specs only")
    finite = np.sort(table.values[table.values >= 0])
    L = int(finite.shape[0])
    if not np.array_equal(finite, np.arange(L)):
        return False
    if table.goal_as_start != L:
        return False
    if isinstance(table.spec, Uniform) and L != table.size:
        return False
    return True


@dataclass(frozen=True)
class BoundedWin:
    winnable: bool
    moves: int | None


def bounded_win(
    p: Position, spec: MultiGoal, *, table: RemotenessTable | None = None
) -> BoundedWin:
    """Can the prisoner force a goal within the spec's move budget?

    Winnable iff the (unbounded) remoteness is finite and within the limit;
    `moves` is that remoteness.  minimax_bounded answers the same question
    by direct depth-limited search, without the table.
    """
    if not isinstance(spec, MultiGoal) or spec.limit is None:
        raise ValueError("bounded_win needs a MultiGoal spec with a move limit")
    if table is None:
        table = solve(spec)
    r = table.remoteness(p)
    if r != UNWINNABLE and r <= spec.limit:
        return BoundedWin(True, r)
    return BoundedWin(False, None)


def minimax_bounded(p: Position, spec: GoalSpec, limit: int) -> int | None:
    """Depth-limited game-tree search: remoteness of p when it is <= limit,
    else None.

    Deliberately independent of the dense solver so the two can
    cross-check each other; memoized on (position, remaining budget) only.
    """
    alphabet = spec.alphabet
    goals = goal_words(spec)
    too_far = limit + 1
    memo: dict[tuple[Position, int], int] = {}

    def search(pos: Position, budget: int) -> int:
        if pos in goals:
            return 0
        if budget == 0:
            return too_far
        key = (pos, budget)
        got = memo.get(key)
        if got is not None:
            return got
        v = pos[-1]
        rest = pos[:-1]
        best = -1
        for w in range(v):
            r = search((w,) + rest, budget - 1)
            if r >= too_far:
                best = too_far
                break
            if r > best:
                best = r
        if best < too_far:
            reply = min(search((u,) + rest, budget - 1) for u in range(v, alphabet))
            if reply >= too_far:
                best = too_far
            else:
                best = max(best, reply) + 1
                if best > limit:
                    best = too_far
        memo[key] = best
        return best

    p = validate_position(p, alphabet)
    result = search(p, limit)
    return None if result >= too_far else result


# -- table cache file --------------------------------------------------------
#
# Self-describing JSON with a dense value list (-1 = unwinnable).  Keys are
# sorted and separators fixed, so the same table always serializes to the
# same bytes.

def table_to_document(table: RemotenessTable) -> dict:
    return {
        "format_version": CACHE_FORMAT_VERSION,
        "spec": spec_to_doc(table.spec),
        "values": [int(x) for x in table.values],
        "goal_as_start": table.goal_as_start,
    }


def table_from_document(doc: dict) -> RemotenessTable:
    if doc.get("format_version") != CACHE_FORMAT_VERSION:
        raise ValueError(f"unsupported cache format {doc.get('format_version')!r}")
    spec = spec_from_doc(doc["spec"])
    values = np.asarray(doc["values"], dtype=np.int32)
    if values.shape[0] != spec.alphabet**spec.n:
        raise ValueError("value count does not match the spec's state space")
    gas = doc.get("goal_as_start")
    return RemotenessTable(
        spec=spec, values=values, goal_as_start=None if gas is None else int(gas)
    )


def save_table(table: RemotenessTable, path: str | Path) -> None:
    doc = table_to_document(table)
    text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    Path(path).write_bytes(text.encode("ascii"))


def load_table(path: str | Path) -> RemotenessTable:
    return table_from_document(json.loads(Path(path).read_text("ascii")))
