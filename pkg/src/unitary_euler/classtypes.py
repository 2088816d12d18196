"""Semisimple class types and weak compositions.

A class type records the shape of a self-dual characteristic polynomial
``prod r_i^{m_i} * prod (s_j dual(s_j))^{m_j}``: which multiplicities ``m``
occur on irreducible factors of which degree ``d``, and how often (``e``).
The "minus" side holds self-dual factors (odd ``d``), the "plus" side holds
dual pairs and weighs double.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .arith import DEFAULT_ARITH, ArithFn
from .polyq import IntPoly, RatPoly, poly_multinomial

__all__ = ["ClassType", "enumerate_M", "weak_compositions", "class_type_multiplier"]

Triple = tuple[int, int, int]


@dataclass(frozen=True, order=True)
class ClassType:
    minus: tuple[Triple, ...] = ()
    plus: tuple[Triple, ...] = ()

    def __post_init__(self):
        for side in (self.minus, self.plus):
            if list(side) != sorted(side):
                raise ValueError("class type entries must be sorted")
            pairs = [(m, d) for m, d, _ in side]
            if len(set(pairs)) != len(pairs):
                raise ValueError("(m, d) pairs must be distinct within a side")
            if any(m < 1 or d < 1 or e < 1 for m, d, e in side):
                raise ValueError("entries must be positive")
        if any(d % 2 == 0 for _, d, _ in self.minus):
            raise ValueError("self-dual factors have odd degree")

    @classmethod
    def make(cls, minus=(), plus=()) -> ClassType:
        return cls(tuple(sorted(map(tuple, minus))), tuple(sorted(map(tuple, plus))))

    @property
    def weight(self) -> int:
        return sum(m * d * e for m, d, e in self.minus) + 2 * sum(m * d * e for m, d, e in self.plus)

    def to_json(self) -> dict:
        return {"minus": [list(t) for t in self.minus], "plus": [list(t) for t in self.plus]}

    @classmethod
    def from_json(cls, data: dict | str) -> ClassType:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.make(data.get("minus", ()), data.get("plus", ()))

    def __str__(self) -> str:
        def side(entries):
            if not entries:
                return "{}"
            return "{" + ", ".join(f"({m},{d})" + (f"^{e}" if e > 1 else "") for m, d, e in entries) + "}"

        return f"({side(self.minus)}, {side(self.plus)})"


def _part_types(n: int) -> list[tuple[int, int, int, int]]:
    """All ``(side, m, d, weight)`` with weight <= n; side 0 = minus, 1 = plus."""
    parts = []
    for m in range(1, n + 1):
        for d in range(1, n // m + 1):
            if d % 2 == 1:
                parts.append((0, m, d, m * d))
            if 2 * m * d <= n:
                parts.append((1, m, d, 2 * m * d))
    return parts


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[ClassType, ...]:
    parts = _part_types(n)
    found: list[ClassType] = []
    chosen: list[tuple[int, int, int, int]] = []

    def rec(i: int, remaining: int) -> None:
        if remaining == 0:
            minus = [(m, d, e) for s, m, d, e in chosen if s == 0]
            plus = [(m, d, e) for s, m, d, e in chosen if s == 1]
            found.append(ClassType.make(minus, plus))
            return
        if i == len(parts):
            return
        side, m, d, w = parts[i]
        rec(i + 1, remaining)
        for e in range(1, remaining // w + 1):
            chosen.append((side, m, d, e))
            rec(i + 1, remaining - e * w)
            chosen.pop()

    rec(0, n)
    return tuple(sorted(found))


def enumerate_M(n: int) -> list[ClassType]:
    if n < 1:
        raise ValueError("n must be positive")
    return list(_enumerate(n))


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers summing to ``n``, lexicographically."""
    if parts < 1:
        if n == 0:
            yield ()
        return
    for bars in combinations(range(n + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(n + parts - 2 - prev)
        yield tuple(out)


def _side_multiplier(entries: tuple[Triple, ...], count) -> RatPoly:
    by_degree: dict[int, list[int]] = {}
    for _, d, e in entries:
        by_degree.setdefault(d, []).append(e)
    out: RatPoly = IntPoly([1])
    for d in sorted(by_degree):
        out = out * poly_multinomial(count(d), by_degree[d])
    return out


def class_type_multiplier(t: ClassType, arith: ArithFn = DEFAULT_ARITH) -> RatPoly:
    """Number of semisimple classes of type ``t``, as a polynomial in q.

    Factors of a given degree share one budget ``A-(d)`` (or ``A+(d)``)
    across all multiplicities, hence the multinomial per degree.
    """
    return _side_multiplier(t.minus, arith.minus) * _side_multiplier(t.plus, arith.plus)
