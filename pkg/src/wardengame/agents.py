"""Playing strategies and the move-by-move simulator.

The protocol for one transfer: the warden decides first, either writing a
smaller value himself or passing; after a pass the prisoner must transfer
and writes any value from the current one up.

Policies are small stateful objects (reset / observe / choose).  The basic
prisoner policy is the guaranteed-win strategy: work in rounds of n
transfers, writing the goal digit for each slot until the warden interferes
in the round, then keep everything unchanged until the round ends.  Each
round either finishes the game or strictly lowers the position read as a
base-m number, so the win needs at most n * m**n transfers.  For a general
goal word the policy first idles (transfers unchanged) until the position
sits componentwise under the goal, which some rotation must eventually do
for a winnable start.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from wardengame.core import (
    Actor,
    GoalSpec,
    MoveChoice,
    MultiGoal,
    Position,
    WardenGameError,
    apply_move,
    format_position,
    is_goal,
    spec_to_doc,
    validate_position,
)
from wardengame.solver import UNWINNABLE, RemotenessTable, solve


class UnboundedPlay(WardenGameError):
    """The warden can stall forever against the fixed prisoner policy."""


class SearchBudgetExceeded(WardenGameError):
    """Exhaustive worst-case search visited more states than allowed."""


# -- transcripts -------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    actor: Actor
    value: int
    position: Position


@dataclass(frozen=True)
class Won:
    moves: int


@dataclass(frozen=True)
class Unresolved:
    cap: int


@dataclass(frozen=True)
class Transcript:
    """Ordered record of one playthrough."""

    spec: GoalSpec
    start: Position
    goal_as_start: bool
    steps: tuple[Step, ...]
    outcome: Won | Unresolved

    def to_lines(self) -> list[str]:
        alphabet = self.spec.alphabet
        lines = [
            f"{i} {step.actor.value} {step.value} {format_position(step.position, alphabet)}"
            for i, step in enumerate(self.steps, start=1)
        ]
        if isinstance(self.outcome, Won):
            lines.append(f"won {self.outcome.moves}")
        else:
            lines.append(f"unresolved {self.outcome.cap}")
        return lines

    def to_document(self) -> dict:
        outcome: dict
        if isinstance(self.outcome, Won):
            outcome = {"result": "won", "moves": self.outcome.moves}
        else:
            outcome = {"result": "unresolved", "cap": self.outcome.cap}
        return {
            "spec": spec_to_doc(self.spec),
            "start": list(self.start),
            "goal_as_start": self.goal_as_start,
            "steps": [
                {"actor": s.actor.value, "value": s.value, "position": list(s.position)}
                for s in self.steps
            ],
            "outcome": outcome,
        }


# -- prisoner policies -------------------------------------------------------

class PrisonerPolicy:
    def reset(self, spec: GoalSpec, start: Position) -> None:
        pass

    def observe(self, actor: Actor, value: int, position: Position) -> None:
        pass

    def choose_value(self, position: Position) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class BasicState:
    """Round bookkeeping: whether the policy is engaged, the transfer count
    within the current round (mod n), and whether the warden interfered in
    the round.  Folding the clock keeps the state space finite for the
    exhaustive worst-case search."""

    active: bool
    clock: int
    spoiled: bool


def _fits_under(position: Position, goal: Position) -> bool:
    return all(p <= g for p, g in zip(position, goal))


def _basic_initial(goal: Position, start: Position) -> BasicState:
    return BasicState(active=_fits_under(start, goal), clock=0, spoiled=False)


def _basic_transition(
    goal: Position, state: BasicState, actor: Actor, position_after: Position
) -> BasicState:
    if not state.active:
        if _fits_under(position_after, goal):
            return BasicState(active=True, clock=0, spoiled=False)
        return state
    clock = (state.clock + 1) % len(goal)
    # Any warden transfer is a decrease, which spoils the round; the flag
    # clears at the round boundary (clock back at 0).
    spoiled = (state.spoiled or actor is Actor.WARDEN) and clock != 0
    return BasicState(active=True, clock=clock, spoiled=spoiled)


def _basic_choice(goal: Position, state: BasicState, position: Position) -> int:
    v = position[-1]
    if not state.active or state.spoiled:
        return v
    # The item transferred on round move t ends the round in slot n-1-t.
    target = goal[len(goal) - 1 - state.clock]
    return target if target >= v else v


class BasicPrisoner(PrisonerPolicy):
    """The always-wins strategy from the bound n * m**n (see module notes)."""

    def reset(self, spec: GoalSpec, start: Position) -> None:
        if isinstance(spec, MultiGoal):
            raise ValueError("the basic policy targets a single goal word")
        self._goal = spec.goal
        self._state = _basic_initial(self._goal, start)

    def observe(self, actor: Actor, value: int, position: Position) -> None:
        self._state = _basic_transition(self._goal, self._state, actor, position)

    def choose_value(self, position: Position) -> int:
        return _basic_choice(self._goal, self._state, position)

    @property
    def state(self) -> BasicState:
        return self._state


def _optimal_prisoner_value(table: RemotenessTable, position: Position) -> int:
    alphabet = table.alphabet
    v = position[-1]
    rest = position[:-1]
    best_value = v
    best_r = None
    for u in range(v, alphabet):
        r = table.remoteness((u,) + rest)
        if r == UNWINNABLE:
            continue
        if best_r is None or r < best_r:
            best_r = r
            best_value = u
    return best_value


class OptimalPrisoner(PrisonerPolicy):
    """Moves to the child of smallest remoteness (smallest value on ties)."""

    def __init__(self, table: RemotenessTable):
        self._table = table

    def choose_value(self, position: Position) -> int:
        return _optimal_prisoner_value(self._table, position)


# -- warden policies ---------------------------------------------------------

class WardenPolicy:
    def reset(self, spec: GoalSpec, start: Position) -> None:
        pass

    def observe(self, actor: Actor, value: int, position: Position) -> None:
        pass

    def choose(self, position: Position) -> int | None:
        """A value to write (strictly below the rightmost digit) or None to
        pass."""
        raise NotImplementedError


class NeverDecreaseWarden(WardenPolicy):
    def choose(self, position: Position) -> int | None:
        return None


class GreedyMaxChildWarden(WardenPolicy):
    """Keeps digits as high as the rules allow: always writes v-1, never
    passes voluntarily."""

    def choose(self, position: Position) -> int | None:
        v = position[-1]
        return v - 1 if v > 0 else None


class RandomWarden(WardenPolicy):
    """Uniform over pass plus every legal decrease; deterministic per seed."""

    def __init__(self, seed: int):
        self._seed = seed
        self._rng = random.Random(seed)

    def reset(self, spec: GoalSpec, start: Position) -> None:
        self._rng = random.Random(self._seed)

    def choose(self, position: Position) -> int | None:
        options: list[int | None] = [None]
        options.extend(range(position[-1]))
        return self._rng.choice(options)


class OptimalWarden(WardenPolicy):
    """Stalls as long as the game allows: takes an unwinnable branch when one
    exists, otherwise the branch of largest remoteness (a write beats a pass
    on ties, smallest value among equal writes)."""

    def __init__(self, table: RemotenessTable):
        self._table = table

    def choose(self, position: Position) -> int | None:
        table = self._table
        v = position[-1]
        if v == 0:
            return None
        rest = position[:-1]
        child_r = [table.remoteness((d,) + rest) for d in range(table.alphabet)]
        for w in range(v):
            if child_r[w] == UNWINNABLE:
                return w
        finite_reply = [r for r in child_r[v:] if r != UNWINNABLE]
        if not finite_reply:
            return None
        pass_value = min(finite_reply)
        best_write = max(child_r[:v])
        if best_write >= pass_value:
            return child_r[:v].index(best_write)
        return None


# -- simulator ----------------------------------------------------------------

def simulate(
    spec: GoalSpec,
    start: Position,
    prisoner: PrisonerPolicy,
    warden: WardenPolicy,
    cap: int = 10_000,
    *,
    goal_as_start: bool = False,
) -> Transcript:
    """Run one game to the goal or to the move cap.

    Deterministic given the policies (and their seeds).  With goal_as_start
    a start on the goal does not win until it is reached again.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    alphabet = spec.alphabet
    position = first = validate_position(start, alphabet)
    if len(position) != spec.n:
        raise ValueError("start length does not match the spec")
    steps: list[Step] = []
    if is_goal(position, spec) and not goal_as_start:
        return Transcript(spec, first, goal_as_start, (), Won(0))
    prisoner.reset(spec, position)
    warden.reset(spec, position)
    for move in range(1, cap + 1):
        decision = warden.choose(position)
        if decision is None:
            choice = MoveChoice(Actor.PRISONER, prisoner.choose_value(position))
        else:
            choice = MoveChoice(Actor.WARDEN, decision)
        position = apply_move(position, choice, alphabet)
        steps.append(Step(choice.actor, choice.value, position))
        prisoner.observe(choice.actor, choice.value, position)
        warden.observe(choice.actor, choice.value, position)
        if is_goal(position, spec):
            return Transcript(spec, first, goal_as_start, tuple(steps), Won(move))
    return Transcript(spec, first, goal_as_start, tuple(steps), Unresolved(cap))


# -- worst case against any warden --------------------------------------------

class WorstCaseSearch:
    """Longest possible game when the prisoner's policy is fixed and the
    warden may do anything.

    Explores every warden choice exhaustively; the prisoner's replies come
    from the policy's pure decision core, so a search node is just
    (position, policy state).  A cycle among nodes means the warden can
    stall forever (UnboundedPlay).  The memo is shared across starts.
    """

    def __init__(
        self,
        spec: GoalSpec,
        policy: str = "basic",
        *,
        table: RemotenessTable | None = None,
        node_budget: int = 5_000_000,
    ):
        self.spec = spec
        self.node_budget = node_budget
        self._memo: dict[tuple, int] = {}
        if policy == "basic":
            if isinstance(spec, MultiGoal):
                raise ValueError("the basic policy targets a single goal word")
            goal = spec.goal
            self._initial = lambda start: _basic_initial(goal, start)
            self._choose = lambda state, pos: _basic_choice(goal, state, pos)
            self._transition = lambda state, actor, pos: _basic_transition(
                goal, state, actor, pos
            )
        elif policy == "optimal":
            tbl = table if table is not None else solve(spec)
            self._initial = lambda start: None
            self._choose = lambda state, pos: _optimal_prisoner_value(tbl, pos)
            self._transition = lambda state, actor, pos: None
        else:
            raise ValueError(f"unknown prisoner policy {policy!r}")

    def _children(self, node: tuple) -> Iterator[tuple]:
        position, state = node
        alphabet = self.spec.alphabet
        v = position[-1]
        rest = position[:-1]
        for w in range(v):
            child = (w,) + rest
            yield (child, self._transition(state, Actor.WARDEN, child))
        u = self._choose(state, position)
        child = (u,) + rest
        yield (child, self._transition(state, Actor.PRISONER, child))

    def length(self, start: Position) -> int:
        start = validate_position(start, self.spec.alphabet)
        if is_goal(start, self.spec):
            return 0
        root = (start, self._initial(start))
        memo = self._memo
        if root in memo:
            return memo[root]
        onstack = {root}
        stack: list[list] = [[root, self._children(root), 0]]
        pushed = 1
        while stack:
            frame = stack[-1]
            try:
                child = next(frame[1])
            except StopIteration:
                finished = frame[2]
                memo[frame[0]] = finished
                onstack.discard(frame[0])
                stack.pop()
                if stack and finished + 1 > stack[-1][2]:
                    stack[-1][2] = finished + 1
                continue
            if is_goal(child[0], self.spec):
                value = 0
            else:
                value = memo.get(child, None)
                if value is None:
                    if child in onstack:
                        raise UnboundedPlay(
                            "the warden can loop forever against this policy"
                        )
                    pushed += 1
                    if pushed > self.node_budget:
                        raise SearchBudgetExceeded(
                            f"worst-case search exceeded {self.node_budget} nodes"
                        )
                    onstack.add(child)
                    stack.append([child, self._children(child), 0])
                    continue
            if value + 1 > frame[2]:
                frame[2] = value + 1
        return memo[root]


def worst_case_length(
    spec: GoalSpec,
    start: Position,
    policy: str = "basic",
    *,
    table: RemotenessTable | None = None,
    node_budget: int = 5_000_000,
) -> int:
    """Moves to the goal under the fixed prisoner policy when the warden
    plays the most obstructive line available."""
    return WorstCaseSearch(
        spec, policy, table=table, node_budget=node_budget
    ).length(start)


# -- factories ----------------------------------------------------------------

PRISONER_POLICIES = ("optimal", "basic")
WARDEN_POLICIES = ("optimal", "never_decrease", "greedy", "random")


def make_prisoner_policy(
    name: str, *, table_provider: Callable[[], RemotenessTable] | None = None
) -> PrisonerPolicy:
    if name == "basic":
        return BasicPrisoner()
    if name == "optimal":
        if table_provider is None:
            raise ValueError("the optimal policy needs a solved table")
        return OptimalPrisoner(table_provider())
    raise ValueError(f"unknown prisoner policy {name!r}")


def make_warden_policy(
    name: str,
    *,
    table_provider: Callable[[], RemotenessTable] | None = None,
    seed: int | None = None,
) -> WardenPolicy:
    if name == "never_decrease":
        return NeverDecreaseWarden()
    if name == "greedy":
        return GreedyMaxChildWarden()
    if name == "random":
        return RandomWarden(0 if seed is None else seed)
    if name == "optimal":
        if table_provider is None:
            raise ValueError("the optimal policy needs a solved table")
        return OptimalWarden(table_provider())
    raise ValueError(f"unknown warden policy {name!r}")
