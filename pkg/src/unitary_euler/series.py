"""Truncated power series in ``x`` whose coefficients are polynomials in ``q``."""

from __future__ import annotations

import json
from typing import Callable, Iterable, Sequence

from .polyq import IntPoly, RatPoly

__all__ = [
    "DEFAULT_ORDER",
    "TruncSeries",
    "series_mul",
    "series_inverse",
    "series_binomial_factor",
    "series_exp_from_log_derivative",
    "series_substitute",
]

DEFAULT_ORDER = 12

_ZERO = IntPoly()
_ONE = IntPoly([1])


def _as_poly(c) -> RatPoly:
    if isinstance(c, RatPoly):
        return c
    return RatPoly([c]) if not isinstance(c, int) else IntPoly([c])


class TruncSeries:
    """Power series ``c_0 + c_1 x + ... + c_N x^N`` modulo ``x^(N+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [_as_poly(c) for c in coeffs][: order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[RatPoly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> TruncSeries:
        return cls([_ONE], order)

    def __getitem__(self, n: int) -> RatPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self.coeffs, min(order, self.order))

    def __add__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries((self.coeffs[i] + other.coeffs[i] for i in range(n + 1)), n)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        n = min(self.order, other.order)
        return TruncSeries((self.coeffs[i] - other.coeffs[i] for i in range(n + 1)), n)

    def __mul__(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return self.map(lambda c: c * other)

    __rmul__ = __mul__

    def __truediv__(self, other: TruncSeries) -> TruncSeries:
        return series_mul(self, series_inverse(other))

    def __pow__(self, e: int) -> TruncSeries:
        if e < 0:
            return series_inverse(self) ** (-e)
        result = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def map(self, fn: Callable[[RatPoly], RatPoly]) -> TruncSeries:
        return TruncSeries((fn(c) for c in self.coeffs), self.order)

    def compose_power(self, d: int) -> TruncSeries:
        """Apply ``q -> q**d`` to every coefficient."""
        return self.map(lambda c: c.compose_power(d))

    def evaluate(self, q) -> list:
        return [c(q) for c in self.coeffs]

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence | str) -> TruncSeries:
        if isinstance(data, str):
            data = json.loads(data)
        return cls((RatPoly.from_json(c) for c in data), len(data) - 1)

    def log_derivative(self) -> list[RatPoly]:
        """Return ``a_1..a_N`` with ``x F'/F = sum a_n x^n`` (requires ``c_0 = 1``)."""
        if self.coeffs[0] != 1:
            raise ValueError("log derivative needs constant term 1")
        c = self.coeffs
        a: list[RatPoly] = [_ZERO]
        for n in range(1, self.order + 1):
            acc = c[n] * n
            for k in range(1, n):
                acc = acc - a[k] * c[n - k]
            a.append(acc)
        return a[1:]

    def pow_poly(self, alpha: RatPoly) -> TruncSeries:
        """``F**alpha`` for a polynomial exponent ``alpha`` (requires ``c_0 = 1``).

        Uses ``n h_n = sum_k (alpha*k - (n-k)) g_k h_{n-k}``, which follows
        from ``F H' = alpha F' H``.
        """
        if self.coeffs[0] != 1:
            raise ValueError("power with polynomial exponent needs constant term 1")
        g = self.coeffs
        alpha = _as_poly(alpha)
        h: list[RatPoly] = [_ONE]
        for n in range(1, self.order + 1):
            acc: RatPoly = _ZERO
            for k in range(1, n + 1):
                if g[k]:
                    acc = acc + (alpha * k - (n - k)) * g[k] * h[n - k]
            h.append(acc / n)
        return TruncSeries(h, self.order)


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    n = min(f.order, g.order)
    fc, gc = f.coeffs, g.coeffs
    out = []
    for k in range(n + 1):
        acc: RatPoly = _ZERO
        for i in range(k + 1):
            if fc[i] and gc[k - i]:
                acc = acc + fc[i] * gc[k - i]
        out.append(acc)
    return TruncSeries(out, n)


def series_inverse(f: TruncSeries) -> TruncSeries:
    if f.coeffs[0] != 1:
        raise ValueError("series inverse needs constant term 1")
    fc = f.coeffs
    inv: list[RatPoly] = [_ONE]
    for k in range(1, f.order + 1):
        acc: RatPoly = _ZERO
        for i in range(1, k + 1):
            if fc[i]:
                acc = acc + fc[i] * inv[k - i]
        inv.append(-acc)
    return TruncSeries(inv, f.order)


def series_binomial_factor(c, e: int, order: int) -> TruncSeries:
    """``(1 + c x)**e`` truncated at ``order``; negative ``e`` goes through the inverse."""
    c = _as_poly(c)
    if e < 0:
        return series_inverse(series_binomial_factor(c, -e, order))
    coeffs: list[RatPoly] = [_ONE]
    binom = 1
    cpow: RatPoly = _ONE
    for k in range(1, min(e, order) + 1):
        binom = binom * (e - k + 1) // k
        cpow = cpow * c
        coeffs.append(cpow * binom)
    return TruncSeries(coeffs, order)


def series_exp_from_log_derivative(a: Sequence, order: int) -> TruncSeries:
    """``exp(sum_{n>=1} a_n x^n / n)`` via ``n c_n = sum_{k=1}^n c_{n-k} a_k``.

    ``a[0]`` is ``a_1``.
    """
    if len(a) < order:
        raise ValueError(f"need {order} log-derivative terms, got {len(a)}")
    av = [_ZERO] + [_as_poly(x) for x in a[:order]]
    c: list[RatPoly] = [_ONE]
    for n in range(1, order + 1):
        acc: RatPoly = _ZERO
        for k in range(1, n + 1):
            if av[k] and c[n - k]:
                acc = acc + c[n - k] * av[k]
        c.append(acc / n)
    return TruncSeries(c, order)


def series_substitute(f: TruncSeries, c=1, k: int = 1, q_power: int | None = None) -> TruncSeries:
    """Return ``F(c x^k)``; with ``q_power=d`` also apply ``q -> q**d`` to the coefficients."""
    if k < 1:
        raise ValueError("k must be positive")
    c = _as_poly(c)
    src = f.compose_power(q_power) if q_power else f
    out: list[RatPoly] = [_ZERO] * (f.order + 1)
    cpow: RatPoly = _ONE
    for n in range(0, f.order // k + 1):
        out[n * k] = src.coeffs[n] * cpow
        cpow = cpow * c
    return TruncSeries(out, f.order)
