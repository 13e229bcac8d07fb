"""Rules of the warden's rotation game.

A row of n items sits on a table, each showing a digit from a fixed
alphabet 0..A-1.  Every move transfers the rightmost item to the far left
of the row.  Whoever moves it may rewrite its value, but the two players
pull in opposite directions:

* the warden may grab the item only to *decrease* its value (so the
  rightmost digit must be positive), otherwise he passes;
* after a pass the prisoner must transfer the item and may keep or
  *increase* its value.

The prisoner wins when the row shows a goal position.  Three goal flavours
exist: every digit equal to A-1 (``Uniform``), an arbitrary fixed word
(``Word``), and a set of winning words with an optional move budget
(``MultiGoal``).

Positions are plain tuples of ints, leftmost digit first; a move prepends
the written value at index 0 and drops the old rightmost digit.  Everything
in this module is a pure function over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence, Union


class WardenGameError(Exception):
    """Base class for all domain errors raised by this package."""


class IllegalMove(WardenGameError):
    """A write that violates the moving player's constraint."""


Position = tuple[int, ...]


class Actor(Enum):
    WARDEN = "warden"
    PRISONER = "prisoner"


@dataclass(frozen=True)
class MoveChoice:
    """One transfer: who moved the item and which value they wrote."""

    actor: Actor
    value: int


@dataclass(frozen=True)
class Uniform:
    """Goal = all digits showing the largest value m-1, n items, m-ary digits."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("Uniform spec needs m >= 1 and n >= 1")

    @property
    def alphabet(self) -> int:
        return self.m

    @property
    def goal(self) -> Position:
        return (self.m - 1,) * self.n


@dataclass(frozen=True)
class Word:
    """Goal = one fixed word; the alphabet is just large enough to write it."""

    goal: Position

    def __post_init__(self) -> None:
        goal = tuple(self.goal)
        if not goal:
            raise ValueError("goal word must be nonempty")
        if any(d < 0 for d in goal):
            raise ValueError("goal digits must be nonnegative")
        object.__setattr__(self, "goal", goal)

    @property
    def alphabet(self) -> int:
        # Values above max(goal) can never sit below any goal digit, so the
        # playable alphabet stops at max(goal).
        return max(self.goal) + 1

    @property
    def n(self) -> int:
        return len(self.goal)


@dataclass(frozen=True)
class MultiGoal:
    """Goal = any word from a set, optionally within a move budget."""

    alphabet: int
    n: int
    goals: frozenset[Position] = field(default_factory=frozenset)
    limit: int | None = None

    def __post_init__(self) -> None:
        goals = frozenset(tuple(g) for g in self.goals)
        if self.alphabet < 1 or self.n < 1:
            raise ValueError("MultiGoal spec needs alphabet >= 1 and n >= 1")
        if not goals:
            raise ValueError("MultiGoal needs at least one goal word")
        for g in goals:
            if len(g) != self.n:
                raise ValueError(f"goal word {g} does not have length {self.n}")
            if any(not 0 <= d < self.alphabet for d in g):
                raise ValueError(f"goal word {g} has digits outside 0..{self.alphabet - 1}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("move limit must be >= 0")
        object.__setattr__(self, "goals", goals)


GoalSpec = Union[Uniform, Word, MultiGoal]


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def prime_goal_set(limit: int | None = 19) -> MultiGoal:
    """The two-die puzzle: win on any two-digit prime, leading zeros allowed.

    A pair of digits d1 d2 is a goal exactly when 10*d1 + d2 is prime.
    """
    goals = frozenset(
        (k // 10, k % 10) for k in range(100) if _is_prime(k)
    )
    return MultiGoal(alphabet=10, n=2, goals=goals, limit=limit)


def goal_words(spec: GoalSpec) -> frozenset[Position]:
    """All winning words of a spec, as a set."""
    if isinstance(spec, MultiGoal):
        return spec.goals
    return frozenset((spec.goal,))


def validate_position(digits: Sequence[int], alphabet: int) -> Position:
    p = tuple(digits)
    if not p:
        raise ValueError("a position needs at least one digit")
    for d in p:
        if not 0 <= d < alphabet:
            raise ValueError(f"digit {d} outside alphabet 0..{alphabet - 1}")
    return p


def legal_values(p: Position, alphabet: int) -> tuple[set[int], set[int]]:
    """Writable values for each player on the current rightmost digit.

    The warden may write anything strictly below the rightmost digit v (empty
    when v = 0: a forced pass); the prisoner anything from v to alphabet-1.
    The two sets always partition 0..alphabet-1.
    """
    v = p[-1]
    return set(range(v)), set(range(v, alphabet))


def apply_move(p: Position, choice: MoveChoice, alphabet: int) -> Position:
    """Transfer the rightmost item, writing choice.value on it.

    Raises IllegalMove when the value breaks the actor's constraint
    (warden: value < rightmost digit; prisoner: rightmost digit <= value
    < alphabet).
    """
    v = p[-1]
    value = choice.value
    if choice.actor is Actor.WARDEN:
        if not 0 <= value < v:
            raise IllegalMove(f"warden must decrease: wrote {value} on a {v}")
    else:
        if not v <= value < alphabet:
            raise IllegalMove(
                f"prisoner must keep or increase within the alphabet: "
                f"wrote {value} on a {v} (alphabet {alphabet})"
            )
    return (value,) + p[:-1]


def is_goal(p: Position, spec: GoalSpec) -> bool:
    if isinstance(spec, Uniform):
        target = spec.m - 1
        return all(d == target for d in p)
    if isinstance(spec, Word):
        return p == spec.goal
    return p in spec.goals


def rotations(p: Position) -> Iterator[Position]:
    """All n cyclic rotations of p, starting with p itself."""
    for k in range(len(p)):
        yield p[k:] + p[:k]


def rotation_dominates(p: Position, goal: Sequence[int]) -> bool:
    """Winnability test for a single goal word.

    True when some cyclic rotation of p fits componentwise under the goal
    word.  Positions carrying a digit above max(goal) therefore always fail.
    """
    g = tuple(goal)
    if len(p) != len(g):
        raise ValueError(f"length mismatch: position {len(p)} vs goal {len(g)}")
    return any(all(y <= t for y, t in zip(rot, g)) for rot in rotations(p))


def encode(p: Position, alphabet: int) -> int:
    """Dense table index of a position: base-`alphabet`, leftmost digit most
    significant."""
    idx = 0
    for d in p:
        idx = idx * alphabet + d
    return idx


def decode(index: int, alphabet: int, n: int) -> Position:
    """Inverse of encode; raises on an index outside 0..alphabet**n - 1."""
    if not 0 <= index < alphabet**n:
        raise ValueError(f"index {index} out of range for alphabet {alphabet}, n {n}")
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        index, digits[i] = divmod(index, alphabet)
    return tuple(digits)


# -- text rendering ---------------------------------------------------------
#
# Digits are concatenated without separators up to alphabet 10 ("2503");
# beyond that they are comma-separated ("12,0,3").  For the two-symbol game,
# coins render as H (0) and T (1).

def format_position(p: Sequence[int], alphabet: int) -> str:
    if alphabet <= 10:
        return "".join(str(d) for d in p)
    return ",".join(str(d) for d in p)


def parse_position(text: str, alphabet: int | None = None) -> Position:
    text = text.strip()
    if "," in text:
        digits = tuple(int(part) for part in text.split(","))
    else:
        digits = tuple(int(ch) for ch in text)
    if not digits:
        raise ValueError("empty position")
    if alphabet is not None:
        return validate_position(digits, alphabet)
    return digits


def position_to_coins(p: Sequence[int]) -> str:
    """Render a binary position with H for 0 and T for 1."""
    out = []
    for d in p:
        if d not in (0, 1):
            raise ValueError("coin rendering needs binary digits")
        out.append("T" if d else "H")
    return "".join(out)


def coins_to_position(text: str) -> Position:
    digits = []
    for ch in text.strip().upper():
        if ch == "H":
            digits.append(0)
        elif ch == "T":
            digits.append(1)
        else:
            raise ValueError(f"coin strings use only H and T, got {ch!r}")
    if not digits:
        raise ValueError("empty coin string")
    return tuple(digits)


# -- spec documents ---------------------------------------------------------

def spec_to_doc(spec: GoalSpec) -> dict:
    """JSON-ready description of a goal spec (used by the cache file, the
    CLI and the play server)."""
    if isinstance(spec, Uniform):
        return {"kind": "uniform", "m": spec.m, "n": spec.n}
    if isinstance(spec, Word):
        return {"kind": "word", "goal": list(spec.goal)}
    return {
        "kind": "multi",
        "alphabet": spec.alphabet,
        "n": spec.n,
        "goals": sorted(list(g) for g in spec.goals),
        "limit": spec.limit,
    }


def spec_from_doc(doc: dict) -> GoalSpec:
    kind = doc.get("kind")
    if kind == "uniform":
        return Uniform(m=int(doc["m"]), n=int(doc["n"]))
    if kind == "word":
        return Word(goal=tuple(int(d) for d in doc["goal"]))
    if kind == "multi":
        return MultiGoal(
            alphabet=int(doc["alphabet"]),
            n=int(doc["n"]),
            goals=frozenset(tuple(int(d) for d in g) for g in doc["goals"]),
            limit=None if doc.get("limit") is None else int(doc["limit"]),
        )
    if kind == "prime":
        if "limit" in doc:
            limit = None if doc["limit"] is None else int(doc["limit"])
        else:
            limit = 19
        return prime_goal_set(limit=limit)
    raise ValueError(f"unknown spec kind {kind!r}")
