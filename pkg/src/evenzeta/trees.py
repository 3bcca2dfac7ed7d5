"""Plane trees, their low/high/weight data, and the sequence transform.

A plane tree on k vertices is encoded by its attachment-level sequence
(l_2, ..., l_k): grow the tree one vertex at a time, always attaching the
new vertex so that it becomes the last vertex of the preorder traversal,
and record its level.  Validity means l_2 = 1 and 1 <= l_{t+1} <= l_t + 1,
and the valid sequences for k vertices are counted by the Catalan number
C_{k-1}.  Deleting the last preorder vertex truncates the sequence by one,
which turns the deletion recursion for the low/high sets into a
left-to-right replay.

Replay step, in index-set form (positions into the value sequence): let s1
be the shifted low set of the k-1 vertex tree and i the level of the new
k-th vertex.  Then

    low  = s1 + enough smallest positions of {1..k-2} - s1 to reach k-1-i members
    high = s1 + the i-1 greatest positions of {2..k-1} - s1
    weight *= product of the values over high

For the default odd sequence, summing weight * (value product over the
shifted low set) over all k-vertex trees yields the zeta numerator;
keeping the low sets as polynomial factors instead reproduces the k-th
recursion polynomial term by term.

The Catalan-sized walk is the hot loop of the package, so it lives in a
small kernel with a compiled (Cython) and a pure-Python implementation;
the compiled one is used when available unless EVENZETA_PURE is set.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .polynomials import Polynomial
from .recursion import IndexSet, factor_product
from .sequences import ODD_NUMBERS, SequenceSpec

if os.environ.get("EVENZETA_PURE"):
    from . import _treewalk_py as _kernel
else:
    try:
        from . import _treewalk as _kernel  # type: ignore[no-redef]
    except ImportError:
        from . import _treewalk_py as _kernel  # type: ignore[no-redef]

KERNEL_BACKEND: str = _kernel.BACKEND

ENUMERATION_MAX = 16  # Catalan growth guard for tree streams
TREE_SUM_MAX = 14  # guard for whole-family aggregations

Weight = Union[int, Fraction]

__all__ = [
    "PlaneTree",
    "TreeData",
    "catalan",
    "enumerate_trees",
    "tree_data",
    "polynomial_via_trees",
    "numerator_via_trees",
    "generalized_transform",
    "KERNEL_BACKEND",
    "ENUMERATION_MAX",
    "TREE_SUM_MAX",
]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@dataclass(frozen=True)
class PlaneTree:
    """A plane tree encoded by its attachment-level sequence (empty for k=1)."""

    levels: tuple[int, ...]

    def __init__(self, levels=()):
        levels = tuple(levels)
        for t, lv in enumerate(levels):
            upper = levels[t - 1] + 1 if t > 0 else 1
            if not 1 <= lv <= upper:
                raise ValueError(
                    f"invalid level sequence {levels}: entry {t} is {lv}, allowed 1..{upper}"
                )
        object.__setattr__(self, "levels", levels)

    @property
    def vertex_count(self) -> int:
        return len(self.levels) + 1

    def __str__(self):
        return ",".join(str(lv) for lv in self.levels) or "."


@dataclass(frozen=True)
class TreeData:
    """Low/high sets and the accumulated weight of one plane tree."""

    low: IndexSet
    high: IndexSet
    weight: Weight


def enumerate_trees(k: int, *, max_k: int = ENUMERATION_MAX) -> Iterator[PlaneTree]:
    """All plane trees on k vertices, lazily, in lexicographic level order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > max_k:
        raise ValueError(
            f"k={k} would enumerate {catalan(k - 1)} trees, beyond the bound max_k={max_k}"
        )

    def rec(prefix: list[int]) -> Iterator[PlaneTree]:
        if len(prefix) == k - 1:
            yield PlaneTree(prefix)
            return
        for lv in range(1, prefix[-1] + 2):
            prefix.append(lv)
            yield from rec(prefix)
            prefix.pop()

    if k == 1:
        yield PlaneTree(())
    else:
        yield from rec([1])


def tree_data(tree: PlaneTree, seq: SequenceSpec = ODD_NUMBERS) -> TreeData:
    """Replay the attachment history of one tree (reference implementation).

    The kernels aggregate the same recursion over whole families; this
    per-tree version is what they are validated against.
    """
    low: set[int] = set()
    high: set[int] = set()
    weight: Weight = 1
    levels = tree.levels
    for t in range(3, tree.vertex_count + 1):
        i = levels[t - 2]
        s1 = {n + 1 for n in low}
        low_pool = [n for n in range(1, t - 1) if n not in s1]
        high_pool = [n for n in range(2, t) if n not in s1]
        need = (t - 1 - i) - len(s1)
        high = s1 | set(high_pool[len(high_pool) - (i - 1) :] if i > 1 else [])
        low = s1 | set(low_pool[:need])
        weight = weight * seq.product(high)
    return TreeData(low=IndexSet(low), high=IndexSet(high), weight=weight)


def _check_sum_bound(k: int, lo: int = 2) -> None:
    if not lo <= k <= TREE_SUM_MAX:
        raise ValueError(
            f"k={k} outside {lo}..{TREE_SUM_MAX} "
            f"(k={k} means {catalan(k - 1)} trees)"
        )


def polynomial_via_trees(k: int) -> Polynomial:
    """The k-th recursion polynomial assembled as a tree sum.

    Sums weight * factor_product(low, k-1) over all k-vertex trees, after
    folding the walk by low set so each distinct factor is expanded once.
    """
    _check_sum_bound(k)
    table = _kernel.low_weight_table(k, ODD_NUMBERS.values_upto(k))
    out = Polynomial()
    for mask in sorted(table):
        out = out + table[mask] * factor_product(IndexSet.from_mask(mask), k - 1)
    return out


def numerator_via_trees(k: int) -> int:
    """The zeta numerator as the positive tree sum weight * product(low shifted)."""
    _check_sum_bound(k)
    table = _kernel.low_weight_table(k, ODD_NUMBERS.values_upto(k))
    total = 0
    for mask, wt in table.items():
        total += wt * ODD_NUMBERS.product(IndexSet.from_mask(mask << 1))
    return total


def generalized_transform(k: int, seq: SequenceSpec = ODD_NUMBERS) -> Fraction:
    """The tree-sum transform of an arbitrary nonzero value sequence.

    Needs values at positions 1..k.  Returns

        sum over k-vertex trees of weight * product(low shifted)
        -----------------------------------------------------------
        prod_{j=1}^{k} (product of the values at positions 1..j)

    For the default odd sequence this equals 2*zeta(2k)/pi^(2k).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > TREE_SUM_MAX:
        raise ValueError(
            f"k={k} outside 1..{TREE_SUM_MAX} (k={k} means {catalan(k - 1)} trees)"
        )
    values = seq.values_upto(k)  # validates presence and nonzero-ness
    table = _kernel.low_weight_table(k, values)
    numerator: Weight = 0
    for mask, wt in table.items():
        numerator += wt * seq.product(IndexSet.from_mask(mask << 1))
    denominator: Weight = 1
    running: Weight = 1
    for j in range(1, k + 1):
        running = running * values[j - 1]
        denominator = denominator * running
    return Fraction(numerator) / Fraction(denominator)
