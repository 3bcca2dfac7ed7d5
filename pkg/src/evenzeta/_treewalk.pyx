# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled tree-walk kernel; same contract as evenzeta._treewalk_py.

Level bookkeeping and mask arithmetic run on C integers; weights stay
Python objects so arbitrary-precision ints and Fractions work unchanged.
"""

BACKEND = "compiled"


cdef int _popcount(unsigned int x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef void _walk(int t, int k, int level, unsigned int low, object wt,
                list r_values, dict table):
    cdef unsigned int s1 = low << 1
    cdef unsigned int mask = s1
    cdef int need = (t - 1 - level) - _popcount(s1)
    cdef int n = 0
    while need:
        if not (s1 >> n) & 1:
            mask |= 1u << n
            need -= 1
        n += 1
    cdef object w = wt
    cdef unsigned int rem = s1
    n = 0
    while rem:
        if rem & 1:
            w = w * r_values[n]
        rem >>= 1
        n += 1
    cdef int taken = level - 1
    n = t - 2
    while taken:
        if not (s1 >> n) & 1:
            w = w * r_values[n]
            taken -= 1
        n -= 1
    cdef int nxt
    if t == k:
        if mask in table:
            table[mask] = table[mask] + w
        else:
            table[mask] = w
    else:
        for nxt in range(1, level + 2):
            _walk(t + 1, k, nxt, mask, w, r_values, table)


def low_weight_table(int k, list r_values):
    """Map each reachable low mask to the summed weight of its trees."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k <= 2:
        return {0: 1}
    table = {}
    _walk(3, k, 1, 0, 1, r_values, table)
    _walk(3, k, 2, 0, 1, r_values, table)
    return table
