"""Möbius function, irreducible/self-dual polynomial counts and related exponents.

The counts are polynomials in ``q``:

* ``count_A(d)``: monic irreducibles of degree ``d`` over F_q with nonzero
  constant term.
* ``count_A_minus(d)``: self-dual monic irreducibles of degree ``d`` over
  F_{q^2}; zero for even ``d``.
* ``count_A_plus(d)``: unordered pairs ``{r, dual(r)}`` of non-self-dual
  monic irreducibles of degree ``d`` over F_{q^2}.

The counts are integer-valued but not integral polynomials (``A(2) =
(q^2 - q)/2``).  Every Möbius sum is formed over the rationals and checked
for integer values, so a wrong formula fails loudly.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Mapping

from sympy import divisors, factorint, isprime

from .polyq import IntPoly, Q, RatPoly

__all__ = [
    "moebius",
    "count_A",
    "count_A_minus",
    "count_A_plus",
    "infprod_exponent",
    "p_part",
    "selfdual_monic_count",
    "ArithFn",
    "DEFAULT_ARITH",
]

_ONE = IntPoly([1])


@lru_cache(maxsize=None)
def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius is defined for n >= 1")
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@lru_cache(maxsize=None)
def count_A(d: int) -> RatPoly:
    if d < 1:
        raise ValueError("degree must be positive")
    acc: RatPoly = IntPoly()
    for e in divisors(d):
        mu = moebius(d // e)
        if mu:
            acc = acc + (Q**e - 1) * mu
    return (acc / d).ensure_integer_valued()


@lru_cache(maxsize=None)
def count_A_minus(d: int) -> RatPoly:
    if d < 1:
        raise ValueError("degree must be positive")
    if d % 2 == 0:
        return IntPoly()
    acc: RatPoly = IntPoly()
    for e in divisors(d):
        mu = moebius(d // e)
        if mu:
            acc = acc + (Q**e + 1) * mu
    return (acc / d).ensure_integer_valued()


@lru_cache(maxsize=None)
def count_A_plus(d: int) -> RatPoly:
    return ((count_A(d).compose_power(2) - count_A_minus(d)) / 2).ensure_integer_valued()


@lru_cache(maxsize=None)
def infprod_exponent(r: int, n: int) -> RatPoly:
    """``(1/n) sum_{d|n} mu(n/d) ((-q)^d - 1)^r``."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    acc: RatPoly = IntPoly()
    for d in divisors(n):
        mu = moebius(n // d)
        if mu:
            acc = acc + ((-Q) ** d - 1) ** r * mu
    return (acc / n).ensure_integer_valued()


def p_part(m: int, p: int) -> int:
    """Largest power of the prime ``p`` dividing ``m``."""
    if m == 0:
        raise ValueError("p-part of 0 is undefined")
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    m = abs(m)
    part = 1
    while m % p == 0:
        m //= p
        part *= p
    return part


def selfdual_monic_count(m: int) -> IntPoly:
    if m < 1:
        raise ValueError("degree must be positive")
    return Q**m + Q ** (m - 1)


class ArithFn:
    """Bundle of A, A-, A+ used by the class-type sums.

    ``overrides`` maps ``("A" | "minus" | "plus", d)`` to a replacement
    polynomial; it exists for mutation testing of the identity suites.
    """

    def __init__(self, overrides: Mapping[tuple[str, int], RatPoly] | None = None):
        self._overrides = dict(overrides or {})
        self._lock = threading.Lock()
        self._cache: dict[tuple[str, int], RatPoly] = {}

    def _get(self, kind: str, d: int, fn) -> RatPoly:
        key = (kind, d)
        try:
            return self._cache[key]
        except KeyError:
            pass
        value = self._overrides.get(key)
        if value is None:
            value = fn(d)
        with self._lock:
            return self._cache.setdefault(key, value)

    def A(self, d: int) -> RatPoly:
        return self._get("A", d, count_A)

    def minus(self, d: int) -> RatPoly:
        return self._get("minus", d, count_A_minus)

    def plus(self, d: int) -> RatPoly:
        return self._get("plus", d, count_A_plus)

    @property
    def perturbed(self) -> bool:
        return bool(self._overrides)


DEFAULT_ARITH = ArithFn()
