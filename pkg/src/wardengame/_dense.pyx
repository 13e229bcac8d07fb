# Compiled retrograde kernel: counter-driven backward induction over the
# dense position table.  Mirrors _dense_py.solve_dense exactly; see that
# module for the algorithm notes.

import numpy as np


def solve_dense(long long alphabet, long long n, goal_indices):
    cdef long long size = 1
    cdef long long i
    for i in range(n):
        size *= alphabet
    cdef long long prefix_radix = size // alphabet

    values_arr = np.full(size, -1, dtype=np.int32)
    warden_left_arr = np.tile(np.arange(alphabet, dtype=np.int32), prefix_radix)
    warden_max_arr = np.full(size, -1, dtype=np.int32)
    pass_min_arr = np.full(size, -1, dtype=np.int32)
    queue_arr = np.empty(size, dtype=np.int64)

    cdef int[::1] values = values_arr
    cdef int[::1] warden_left = warden_left_arr
    cdef int[::1] warden_max = warden_max_arr
    cdef int[::1] pass_min = pass_min_arr
    cdef long long[::1] queue = queue_arr

    cdef long long head = 0, tail = 0
    cdef long long g
    for g_obj in goal_indices:
        g = g_obj
        if values[g] == -1:
            values[g] = 0
            queue[tail] = g
            tail += 1

    cdef long long child, parent, base, written, t
    cdef int r, best
    while head < tail:
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
                queue[tail] = parent
                tail += 1

    return values_arr
