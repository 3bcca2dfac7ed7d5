"""Pure-Python tree-walk kernel.

Walks every plane tree on k vertices (encoded as attachment-level sequences
l_2..l_k with l_2 = 1 and 1 <= l_{t+1} <= l_t + 1) while replaying the
low/high/weight recursion, and folds the results into a table keyed by the
final low set.

Sets of positions are bitmasks: bit n-1 marks position n.  r_values[n-1]
holds the sequence value at position n; values may be int or Fraction, and
weights take whichever type the products produce.

The compiled extension evenzeta._treewalk implements the same function with
the same semantics; trees.py picks one at import time.
"""

from __future__ import annotations

BACKEND = "pure"


def low_weight_table(k: int, r_values: list) -> dict:
    """Map each reachable low mask to the summed weight of its trees.

    Replay step for vertex count t at level i, with s1 the shifted previous
    low mask: the low mask gains enough smallest unused positions from
    {1..t-2} to reach t-1-i bits, the high mask is s1 plus the i-1 greatest
    unused positions from {2..t-1}, and the weight is multiplied by the
    value product over the whole high mask.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k <= 2:
        return {0: 1}
    table: dict = {}

    def walk(t: int, level: int, low: int, wt):
        s1 = low << 1
        need = (t - 1 - level) - s1.bit_count()
        mask = s1
        n = 0  # bit index = position - 1
        while need:
            if not (s1 >> n) & 1:
                mask |= 1 << n
                need -= 1
            n += 1
        w = wt
        rem = s1
        n = 0
        while rem:
            if rem & 1:
                w = w * r_values[n]
            rem >>= 1
            n += 1
        taken = level - 1
        n = t - 2  # greatest candidate position is t-1, bit t-2
        while taken:
            if not (s1 >> n) & 1:
                w = w * r_values[n]
                taken -= 1
            n -= 1
        if t == k:
            table[mask] = table.get(mask, 0) + w
        else:
            for nxt in range(1, level + 2):
                walk(t + 1, nxt, mask, w)

    walk(3, 1, 0, 1)
    walk(3, 2, 0, 1)
    return table
