"""De Bruijn sequence machinery, independent of the game solver.

Two classical constructions of the lexicographically minimal ("granddaddy")
sequence act as oracles for the solver's optimal-play chain: a greedy
smallest-digit extension and the concatenation of Lyndon words whose length
divides the rank.  Alongside them: verifiers, exhaustive enumeration for
small parameters, naive window location, and winnable-position counting for
goal-word loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from wardengame.core import (
    Position,
    WardenGameError,
    format_position,
    rotation_dominates,
)
from wardengame.solver import ChainSequence, RemotenessTable, StateSpaceTooLarge, UNWINNABLE

DEFAULT_CAP = 10**8

ENUMERATION_GUARD = 10**5


class WordNotPresent(WardenGameError):
    """locate() was asked for a window the sequence does not contain."""


class EnumerationGuardExceeded(WardenGameError):
    """enumerate_all refused: too many sequences exist at these parameters."""


@dataclass(frozen=True)
class DeBruijnSequence:
    """A cyclic sequence over {0..m-1} containing every length-n word once."""

    m: int
    n: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if len(self.digits) != self.m**self.n:
            raise ValueError(
                f"a (m={self.m}, n={self.n}) sequence must have {self.m ** self.n} digits"
            )

    @property
    def length(self) -> int:
        return len(self.digits)

    def window_at(self, offset: int) -> Position:
        L = self.length
        return tuple(self.digits[(offset + i) % L] for i in range(self.n))

    def windows(self) -> Iterator[Position]:
        for k in range(self.length):
            yield self.window_at(k)

    def __str__(self) -> str:
        return format_position(self.digits, self.m)


def _cyclic_windows(digits: Sequence[int], n: int) -> list[Position]:
    L = len(digits)
    return [tuple(digits[(k + i) % L] for i in range(n)) for k in range(L)]


def canonical_rotation(digits: Sequence[int], n: int) -> tuple[int, ...]:
    """Rotate a loop so the (unique) all-zero length-n window leads."""
    digits = tuple(digits)
    zero = (0,) * n
    for k, w in enumerate(_cyclic_windows(digits, n)):
        if w == zero:
            return digits[k:] + digits[:k]
    raise ValueError("loop has no all-zero window")


def greedy_granddaddy(m: int, n: int, *, cap: int = DEFAULT_CAP) -> DeBruijnSequence:
    """Greedy construction of the lexicographically minimal sequence.

    Seed with the all-(m-1) window and repeatedly append the smallest digit
    whose new window is unseen; the walk dead-ends after visiting every
    window exactly once.  Returned in canonical rotation (leading zeros).
    """
    size = m**n
    if size > cap:
        raise StateSpaceTooLarge(f"{m}**{n} = {size} windows exceeds the cap of {cap}")
    if m == 1:
        return DeBruijnSequence(m, n, (0,))
    seq = [m - 1] * n
    seen = {tuple(seq)}
    while True:
        suffix = tuple(seq[-(n - 1):]) if n > 1 else ()
        for d in range(m):
            w = suffix + (d,)
            if w not in seen:
                seen.add(w)
                seq.append(d)
                break
        else:
            break
    if len(seq) != size + n - 1 or seq[size:] != seq[: n - 1]:
        raise AssertionError("greedy walk did not close into a loop")
    return DeBruijnSequence(m, n, canonical_rotation(seq[:size], n))


def lyndon_words(m: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """All Lyndon words over {0..m-1} of length <= max_len, lexicographically.

    Duval's generation: periodically extend the current word to max_len,
    strip trailing maximal digits, bump the last one.
    """
    w = [0]
    while w:
        yield tuple(w)
        w = [w[i % len(w)] for i in range(max_len)]
        while w and w[-1] == m - 1:
            w.pop()
        if w:
            w[-1] += 1


def fkm(m: int, n: int, *, cap: int = DEFAULT_CAP) -> DeBruijnSequence:
    """Lyndon-word concatenation construction of the minimal sequence.

    Concatenating, in lexicographic order, every Lyndon word whose length
    divides n yields the same loop as greedy_granddaddy, already in
    canonical rotation.
    """
    size = m**n
    if size > cap:
        raise StateSpaceTooLarge(f"{m}**{n} = {size} windows exceeds the cap of {cap}")
    digits: list[int] = []
    for w in lyndon_words(m, n):
        if n % len(w) == 0:
            digits.extend(w)
    return DeBruijnSequence(m, n, tuple(digits))


def is_de_bruijn(digits: Sequence[int], m: int, n: int) -> bool:
    """Does the loop contain every length-n word over {0..m-1} exactly once?"""
    digits = tuple(digits)
    if len(digits) != m**n:
        return False
    if any(not 0 <= d < m for d in digits):
        return False
    return len(set(_cyclic_windows(digits, n))) == len(digits)


def is_generalized(digits: Sequence[int], goal: Sequence[int]) -> bool:
    """Does the loop enumerate exactly the positions winnable toward `goal`,
    each once?"""
    goal = tuple(goal)
    n = len(goal)
    digits = tuple(digits)
    winnable = {
        w for w in _all_words(max(goal) + 1, n) if rotation_dominates(w, goal)
    }
    if len(digits) != len(winnable):
        return False
    windows = _cyclic_windows(digits, n)
    return len(set(windows)) == len(windows) and set(windows) == winnable


def _all_words(m: int, n: int) -> Iterator[Position]:
    word = [0] * n
    while True:
        yield tuple(word)
        i = n - 1
        while i >= 0 and word[i] == m - 1:
            word[i] = 0
            i -= 1
        if i < 0:
            return
        word[i] += 1


def de_bruijn_count(m: int, n: int) -> int:
    """Number of distinct (m, n) de Bruijn loops: (m!)**(m**(n-1)) / m**n."""
    return math.factorial(m) ** (m ** (n - 1)) // m**n


def enumerate_all(
    m: int, n: int, *, guard: int = ENUMERATION_GUARD
) -> list[DeBruijnSequence]:
    """Every (m, n) de Bruijn loop, as canonical rotations, sorted.

    Backtracks over digit choices behind the fixed 0^n prefix.  Refuses when
    the counting formula says more than `guard` sequences exist.  Reversal
    and complement symmetries are distinct sequences here, not quotiented.
    """
    total = de_bruijn_count(m, n)
    if total > guard:
        raise EnumerationGuardExceeded(
            f"{total} sequences at (m={m}, n={n}) exceed the guard of {guard}"
        )
    size = m**n
    if m == 1:
        return [DeBruijnSequence(m, n, (0,))]
    results: list[tuple[int, ...]] = []
    digits = [0] * size
    seen = {(0,) * n}

    def extend(pos: int) -> None:
        if pos == size:
            wrap = [
                tuple(digits[(k + i) % size] for i in range(n))
                for k in range(size - n + 1, size)
            ]
            if len(set(wrap)) == len(wrap) and not any(w in seen for w in wrap):
                results.append(tuple(digits))
            return
        suffix = tuple(digits[pos - n + 1 : pos])
        for d in range(m):
            w = suffix + (d,)
            if w in seen:
                continue
            seen.add(w)
            digits[pos] = d
            extend(pos + 1)
            seen.discard(w)
        digits[pos] = 0

    extend(n)
    sequences = [DeBruijnSequence(m, n, t) for t in sorted(results)]
    if len(sequences) != total:
        raise AssertionError(
            f"enumeration found {len(sequences)} sequences, formula says {total}"
        )
    return sequences


def locate(word: Sequence[int], source) -> int:
    """Offset of a word's window in the canonical loop, by naive scan.

    `source` may be a DeBruijnSequence, a ChainSequence, or a solved
    RemotenessTable (located through remoteness arithmetic, which must
    agree with scanning the chain).
    """
    word = tuple(word)
    if isinstance(source, RemotenessTable):
        if len(word) != source.n:
            raise WordNotPresent(f"word length {len(word)} != table length {source.n}")
        r = source.remoteness(word)
        if r == UNWINNABLE:
            raise WordNotPresent(f"{format_position(word, source.alphabet)} is unwinnable")
        zero_r = int(source.values[0])
        return (r - zero_r) % source.winnable_count
    if isinstance(source, (DeBruijnSequence, ChainSequence)):
        if len(word) != source.n:
            raise WordNotPresent("word length does not match the sequence rank")
        for k in range(source.length):
            if source.window_at(k) == word:
                return k
        raise WordNotPresent(f"{word} does not occur in the sequence")
    raise TypeError(f"cannot locate inside {type(source).__name__}")


def count_winnable(goal: Sequence[int]) -> int:
    """How many positions can be won toward a goal word.

    Computed two ways that must agree: a brute-force filter with the
    rotation test, and inclusion-exclusion over which rotations fit.
    """
    brute = count_winnable_bruteforce(goal)
    incl = count_winnable_inclusion_exclusion(goal)
    if brute != incl:
        raise AssertionError(
            f"winnable counts disagree for goal {tuple(goal)}: {brute} vs {incl}"
        )
    return brute


def count_winnable_bruteforce(goal: Sequence[int]) -> int:
    goal = tuple(goal)
    m = max(goal) + 1
    return sum(1 for w in _all_words(m, len(goal)) if rotation_dominates(w, goal))


def count_winnable_inclusion_exclusion(goal: Sequence[int]) -> int:
    """|union over rotations k of {x : rotation k of x fits under goal}|.

    Requiring a set S of rotations to fit caps digit j at
    min over k in S of goal[(j - k) mod n]; the intersection size is the
    product of (cap + 1).
    """
    goal = tuple(goal)
    n = len(goal)
    total = 0
    for mask in range(1, 1 << n):
        offsets = [k for k in range(n) if mask >> k & 1]
        product = 1
        for j in range(n):
            cap = min(goal[(j - k) % n] for k in offsets)
            product *= cap + 1
        total += product if len(offsets) % 2 == 1 else -product
    return total
