"""Pure-Python retrograde kernel; the fallback when the compiled one is absent.

Same contract as wardengame._dense.solve_dense.  The algorithm is a
backward induction over the dense position table, driven by per-position
counters instead of repeated sweeps:

* a position becomes solvable only once *all* its warden children are
  solved (the warden picks the longest of them) and at least one prisoner
  child is solved (the prisoner picks the shortest);
* positions are assigned in nondecreasing remoteness order, so a plain FIFO
  queue plays the role of the level-by-level attractor: whichever child
  assignment completes a parent's preconditions fixes that parent's value at
  current level + 1, exactly.

Positions never assigned are unwinnable: either some warden option escapes
forever, or every prisoner option does.
"""

from __future__ import annotations

import numpy as np


def solve_dense(alphabet: int, n: int, goal_indices) -> np.ndarray:
    """Remoteness for every position of the (alphabet, n) game, as int32.

    Index layout: position p maps to sum(p[i] * alphabet**(n-1-i)); -1 marks
    an unwinnable position.  `goal_indices` is any iterable of goal indexes.
    """
    size = alphabet**n
    prefix_radix = size // alphabet  # weight of a written digit

    values = [-1] * size
    # i % alphabet is the rightmost digit = number of warden children.
    warden_left = [i % alphabet for i in range(size)]
    warden_max = [-1] * size
    pass_min = [-1] * size

    queue = []
    for g in goal_indices:
        g = int(g)
        if values[g] == -1:
            values[g] = 0
            queue.append(g)

    head = 0
    while head < len(queue):
        child = queue[head]
        head += 1
        r = values[child]
        written = child // prefix_radix
        base = (child % prefix_radix) * alphabet
        for t in range(alphabet):
            parent = base + t
            if values[parent] != -1:
                continue
            if written < t:
                warden_left[parent] -= 1
                if r > warden_max[parent]:
                    warden_max[parent] = r
            else:
                if pass_min[parent] == -1 or r < pass_min[parent]:
                    pass_min[parent] = r
            if warden_left[parent] == 0 and pass_min[parent] != -1:
                best = warden_max[parent]
                if pass_min[parent] > best:
                    best = pass_min[parent]
                values[parent] = best + 1
                queue.append(parent)

    return np.asarray(values, dtype=np.int32)
