"""Finite posets and their reduced Euler characteristics.

A :class:`FinitePoset` keeps its elements in a linear extension (every
element comes after everything below it) together with the strict
down-sets.  The reduced Euler characteristic is computed from chain counts
via the recursion ``s(x) = 1 - sum_{y < x} s(y)``: ``s(x)`` is the signed
number of chains with top ``x``, and ``chi~(P) = -1 + sum_x s(x)``.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

__all__ = ["FinitePoset", "reduced_euler_char", "chain_counts", "random_poset"]


class FinitePoset:
    def __init__(self, size: int, below: Sequence[Iterable[int]]):
        """``below[i]`` lists the elements strictly less than ``i``.

        The relation must be transitive, irreflexive and compatible with
        index order (``j < i`` whenever ``j`` is below ``i``).
        """
        if len(below) != size:
            raise ValueError("need one down-set per element")
        self.size = size
        self.below: tuple[frozenset[int], ...] = tuple(frozenset(b) for b in below)
        for i, b in enumerate(self.below):
            if any(j >= i or j < 0 for j in b):
                raise ValueError("elements must be listed in a linear extension")
            for j in b:
                if not self.below[j] <= b:
                    raise ValueError("relation is not transitive")

    @classmethod
    def from_relation(cls, size: int, less) -> FinitePoset:
        """Build from a predicate ``less(i, j)``; elements are reordered topologically."""
        down = [{j for j in range(size) if j != i and less(j, i)} for i in range(size)]
        order: list[int] = []
        placed: set[int] = set()
        while len(order) < size:
            progress = False
            for i in range(size):
                if i not in placed and down[i] <= placed:
                    order.append(i)
                    placed.add(i)
                    progress = True
            if not progress:
                raise ValueError("relation has a cycle")
        pos = {old: new for new, old in enumerate(order)}
        return cls(size, [{pos[j] for j in down[old]} for old in order])

    @classmethod
    def antichain(cls, m: int) -> FinitePoset:
        return cls(m, [()] * m)

    @classmethod
    def chain(cls, m: int) -> FinitePoset:
        return cls(m, [range(i) for i in range(m)])

    def less(self, a: int, b: int) -> bool:
        return a in self.below[b]

    def join(self, other: FinitePoset) -> FinitePoset:
        """``P * Q``: disjoint union with every element of P below every element of Q."""
        n = self.size
        below = list(self.below) + [set(range(n)) | {n + j for j in b} for b in other.below]
        return FinitePoset(n + other.size, below)

    def product(self, other: FinitePoset) -> FinitePoset:
        """Cartesian product with the componentwise order."""
        m = other.size

        def le(a: int, b: int, P: FinitePoset) -> bool:
            return a == b or a in P.below[b]

        pairs = [(a, b) for a in range(self.size) for b in range(m)]
        return FinitePoset.from_relation(
            len(pairs),
            lambda i, j: pairs[i] != pairs[j]
            and le(pairs[i][0], pairs[j][0], self)
            and le(pairs[i][1], pairs[j][1], other),
        )

    def least(self) -> int | None:
        for i in range(self.size):
            if len(self.below[i]) == 0 and all(i in self.below[j] for j in range(self.size) if j != i):
                return i
        return None

    def with_least(self) -> FinitePoset:
        """Adjoin a new least element (placed first)."""
        return FinitePoset(self.size + 1, [()] + [{0} | {j + 1 for j in b} for b in self.below])

    def remove_least(self) -> FinitePoset:
        z = self.least()
        if z is None:
            raise ValueError("poset has no least element")
        return self.induced([i for i in range(self.size) if i != z])

    def induced(self, keep: Iterable[int]) -> FinitePoset:
        keep = sorted(set(keep))
        pos = {old: new for new, old in enumerate(keep)}
        return FinitePoset(len(keep), [{pos[j] for j in self.below[i] if j in pos} for i in keep])

    def reduced_euler_char(self, subset: Iterable[int] | None = None) -> int:
        """``chi~`` of the poset, or of the induced subposet on ``subset``."""
        if subset is None:
            members = range(self.size)
            inside = None
        else:
            members = sorted(set(subset))
            inside = set(members)
        s: dict[int, int] = {}
        for x in members:
            acc = 1
            for y in self.below[x]:
                if inside is None or y in inside:
                    acc -= s[y]
            s[x] = acc
        return -1 + sum(s.values())


def reduced_euler_char(P: FinitePoset) -> int:
    return P.reduced_euler_char()


def chain_counts(P: FinitePoset) -> list[int]:
    """``c_k`` = number of chains with ``k + 1`` elements, for k = 0, 1, ..."""
    # ends[x][k] = chains of k+1 elements with top x.
    ends: list[list[int]] = []
    for x in range(P.size):
        row = [1]
        for y in P.below[x]:
            for k, c in enumerate(ends[y]):
                if k + 1 >= len(row):
                    row.append(0)
                row[k + 1] += c
        ends.append(row)
    total: list[int] = []
    for row in ends:
        for k, c in enumerate(row):
            if k >= len(total):
                total.append(0)
            total[k] += c
    return total


def random_poset(size: int, rng: random.Random, density: float = 0.35) -> FinitePoset:
    """Random poset: transitive closure of random edges compatible with index order."""
    below: list[set[int]] = []
    for i in range(size):
        b: set[int] = set()
        for j in range(i):
            if rng.random() < density:
                b.add(j)
                b |= below[j]
        below.append(b)
    return FinitePoset(size, below)
