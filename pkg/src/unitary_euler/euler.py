"""Equivariant reduced Euler characteristics of the unitary building.

Everything here is indexed by the *level* ``r + 1`` of the generating
function ``FGL-_{r+1}(x) = 1 + sum_n (-chi_{r+1}(GU(n,q))) x^n`` and its
general linear counterpart ``FGL+_{r+1}(x) = 1 + sum_n chi_{r+1}(GL(n,q)) x^n``.

Independent routes to the same polynomials:

``closed``     product of binomial factors
``direct``     explicit sum over weak compositions
``exp``        exponential of a log-derivative sequence
``recursion``  Newton-type recursion transported from GL at ``-q``
``infprod``    infinite product with Möbius exponents
``classtype``  sum over semisimple class types, one level at a time
``transform``  iterated product transform of the previous level's series
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from sympy import isprime

from .arith import DEFAULT_ARITH, ArithFn, infprod_exponent, p_part
from .classtypes import ClassType, class_type_multiplier, enumerate_M, weak_compositions
from .polyq import IntPoly, NonIntegralError, Q, RatPoly, poly_multinomial
from .series import (
    TruncSeries,
    series_binomial_factor,
    series_exp_from_log_derivative,
    series_mul,
    series_substitute,
)

__all__ = [
    "PIPELINES",
    "gen_binom",
    "fgl_minus_closed",
    "fgl_plus_closed",
    "chi_gu_direct",
    "chi_gl_direct",
    "exp_log_sequence",
    "chi_gu_exp",
    "chi_gu_recursion",
    "chi_gu_infprod",
    "EulerTable",
    "classtype_sum",
    "chi_gu_classtype",
    "t_transform",
    "chi_gu_T_transform",
    "chi_gu_pipeline",
    "chi_gu",
    "p_primary_series",
    "divisibility_factor",
    "DivisibilityReport",
    "verify_divisibility",
    "IdentityReport",
    "verify_identity_qregular",
    "verify_master_identity",
]

_ONE = IntPoly([1])
_ZERO = IntPoly()


def _check_level(level: int) -> int:
    if level < 1:
        raise ValueError("level r+1 must be at least 1")
    return level - 1


def gen_binom(top: int, k: int) -> int:
    """Binomial coefficient with arbitrary integer top: ``C(-t, k) = (-1)^k C(t+k-1, k)``."""
    if k < 0:
        return 0
    if top >= 0:
        return comb(top, k)
    return (-1) ** k * comb(-top + k - 1, k)


# -- closed forms ----------------------------------------------------------


def fgl_minus_closed(level: int, order: int) -> TruncSeries:
    r = _check_level(level)
    out = TruncSeries.one(order)
    for j in range(r + 1):
        c = Q ** (r - j) * (-1) ** j
        out = series_mul(out, series_binomial_factor(c, (-1) ** j * comb(r, j), order))
    return out


def fgl_plus_closed(level: int, order: int) -> TruncSeries:
    r = _check_level(level)
    out = TruncSeries.one(order)
    for j in range(r + 1):
        out = series_mul(out, series_binomial_factor(-(Q ** (r - j)), (-1) ** j * comb(r, j), order))
    return out


# -- weak composition sums ------------------------------------------------


def _composition_sum(n: int, level: int, gu: bool) -> IntPoly:
    r = _check_level(level)
    tops = [(-1) ** j * comb(r, j) for j in range(r + 1)]
    coeffs: dict[int, int] = {}
    for comp in weak_compositions(n, r + 1):
        c = 1
        deg = 0
        for j, nj in enumerate(comp):
            if nj == 0:
                continue
            b = gen_binom(tops[j], nj)
            if b == 0:
                c = 0
                break
            sign_exp = j * nj if gu else nj
            c *= -b if sign_exp % 2 else b
            deg += nj * (r - j)
        if c:
            coeffs[deg] = coeffs.get(deg, 0) + c
    top = max(coeffs, default=-1)
    return IntPoly([coeffs.get(k, 0) for k in range(top + 1)])


def chi_gu_direct(n: int, level: int) -> IntPoly:
    """``-chi_{r+1}(GU(n,q))`` summed over weak compositions of ``n`` into ``r+1`` parts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _composition_sum(n, level, gu=True)


def chi_gl_direct(n: int, level: int) -> IntPoly:
    """``+chi_{r+1}(GL(n,q))`` by the same composition sum with GL signs."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _composition_sum(n, level, gu=False)


# -- exponential form and recursion -----------------------------------------


def exp_log_sequence(level: int, order: int) -> list[IntPoly]:
    """``a_n = (-1)^{n+1} (q^n - (-1)^n)^r`` for ``n = 1..order``."""
    r = _check_level(level)
    out = []
    for n in range(1, order + 1):
        base = Q**n - (-1) ** n
        out.append(base**r * (-1) ** (n + 1))
    return out


def chi_gu_exp(level: int, order: int) -> TruncSeries:
    return series_exp_from_log_derivative(exp_log_sequence(level, order), order)


def chi_gu_recursion(level: int, order: int) -> list[IntPoly]:
    """``-chi_{r+1}(GU(n,q))`` for ``n = 0..order`` (entry 0 is 1).

    The recursion ``g_n = -(1/n) sum_j ((-q)^j - 1)^r g_{n-j}``, ``g_0 = 1``,
    produces ``g_n = chi_{r+1}(GL(n,-q))``; the unitary values are
    ``(-1)^{n(r+1)} g_n``.
    """
    r = _check_level(level)
    weights = [None] + [((-Q) ** j - 1) ** r for j in range(1, order + 1)]
    g: list[IntPoly] = [_ONE]
    for n in range(1, order + 1):
        acc: RatPoly = _ZERO
        for j in range(1, n + 1):
            acc = acc + weights[j] * g[n - j]
        val = -acc / n
        try:
            g.append(val.to_int())
        except NonIntegralError as exc:
            raise NonIntegralError(f"recursion left a non-integral value at n={n}, level={level}") from exc
    return [gn if (n * level) % 2 == 0 else -gn for n, gn in enumerate(g)]


def chi_gu_infprod(level: int, order: int) -> TruncSeries:
    """Product of ``(1 - y^n)^{b(n)}`` over ``n <= order``, with ``y = (-1)^{r+1} x``.

    With the Möbius exponents ``b(n)`` of :func:`infprod_exponent` the
    product in ``y`` is ``FGL+_{r+1}(y)`` at ``-q``; the sign substitution
    brings it to ``FGL-_{r+1}(x)``.
    """
    r = _check_level(level)
    prod = TruncSeries.one(order)
    for n in range(1, order + 1):
        b = infprod_exponent(r, n)
        if b.is_zero():
            continue
        coeffs: list[RatPoly] = [_ZERO] * (order + 1)
        for k in range(order // n + 1):
            coeffs[n * k] = poly_multinomial(b, [k]) * (-1) ** k
        prod = series_mul(prod, TruncSeries(coeffs, order))
    return series_substitute(prod, (-1) ** level, 1)


# -- class-type recursion -----------------------------------------------------


class EulerTable:
    """Memo of ``-chi_r(GU(n,q))`` and ``+chi_r(GL(n,q))`` as polynomials in q.

    Unitary entries at level >= 2 are built from level ``r - 1`` through
    the class-type sum; level 1 is ``delta_{1,n}``.  General linear entries
    come from the closed GL series.  Reads are lock-free, inserts are
    serialized.
    """

    def __init__(self, arith: ArithFn = DEFAULT_ARITH):
        self.arith = arith
        self._lock = threading.RLock()
        self._gu: dict[tuple[int, int], IntPoly] = {}
        self._gl_series: dict[tuple[int, int], TruncSeries] = {}
        self._composed: dict[tuple[str, int, int, int], RatPoly] = {}

    def __contains__(self, key: tuple[str, int, int]) -> bool:
        family, n, r = key
        if family == "GU":
            return (n, r) in self._gu
        return any(lv == r and order >= n for lv, order in self._gl_series)

    def gu(self, n: int, r: int) -> IntPoly:
        key = (n, r)
        val = self._gu.get(key)
        if val is not None:
            return val
        if n == 0:
            val = _ONE
        elif r == 1:
            val = _ONE if n == 1 else _ZERO
        else:
            val = chi_gu_classtype(n, r, self)
        with self._lock:
            return self._gu.setdefault(key, val)

    def gl(self, n: int, r: int) -> IntPoly:
        for (lv, order), s in self._gl_series.items():
            if lv == r and order >= n:
                return s[n].to_int()
        s = fgl_plus_closed(r, max(n, 12))
        with self._lock:
            self._gl_series[(r, s.order)] = s
        return s[n].to_int()

    def get(self, family: str, n: int, r: int) -> IntPoly:
        if family == "GU":
            return self.gu(n, r)
        if family == "GL":
            return self.gl(n, r)
        raise ValueError(f"unknown family {family!r}")

    def composed(self, family: str, n: int, r: int, d: int) -> RatPoly:
        """Table value with ``q -> q**d`` applied."""
        key = (family, n, r, d)
        val = self._composed.get(key)
        if val is None:
            val = self.get(family, n, r).compose_power(d)
            with self._lock:
                val = self._composed.setdefault(key, val)
        return val


def classtype_sum(
    n: int,
    minus_value: Callable[[int, int], RatPoly],
    plus_value: Callable[[int, int], RatPoly],
    arith: ArithFn = DEFAULT_ARITH,
) -> RatPoly:
    """``sum_{t in M_n} mult(t) prod minus_value(m,d)^e prod plus_value(m,d)^e``."""
    total: RatPoly = _ZERO
    for t in enumerate_M(n):
        term = class_type_multiplier(t, arith)
        for m, d, e in t.minus:
            term = term * minus_value(m, d) ** e
            if term.is_zero():
                break
        else:
            for m, d, e in t.plus:
                term = term * plus_value(m, d) ** e
                if term.is_zero():
                    break
        total = total + term
    return total


def chi_gu_classtype(n: int, level: int, table: EulerTable | None = None) -> IntPoly:
    """Level ``r+1`` unitary value from level ``r`` values via class types."""
    if table is None:
        table = EulerTable()
    r = _check_level(level)
    if n < 1:
        raise ValueError("n must be positive")
    if r == 0:
        return _ONE if n == 1 else _ZERO
    total = classtype_sum(
        n,
        lambda m, d: table.composed("GU", m, r, d),
        lambda m, d: table.composed("GL", m, r, 2 * d),
        table.arith,
    )
    try:
        return total.to_int()
    except NonIntegralError as exc:
        raise NonIntegralError(f"class-type sum not integral at n={n}, level={level}") from exc


# -- product transform -------------------------------------------------------


def t_transform(f: TruncSeries, sign: int, arith: ArithFn = DEFAULT_ARITH) -> TruncSeries:
    """Product transform of a series with constant term 1.

    ``prod_{d odd} (sum_n a(n)(q^d) x^{nd})^{A-(d)}
    * prod_d (sum_n sign^n a(n)(-q^{2d}) x^{2nd})^{A+(d)}``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if f[0] != 1:
        raise ValueError("transform needs constant term 1")
    order = f.order
    out = TruncSeries.one(order)
    for d in range(1, order + 1, 2):
        expo = arith.minus(d)
        if expo.is_zero():
            continue
        cs: list[RatPoly] = [_ZERO] * (order + 1)
        for n in range(order // d + 1):
            cs[n * d] = f[n].compose_power(d)
        out = series_mul(out, TruncSeries(cs, order).pow_poly(expo))
    for d in range(1, order // 2 + 1):
        expo = arith.plus(d)
        if expo.is_zero():
            continue
        cs = [_ZERO] * (order + 1)
        for n in range(order // (2 * d) + 1):
            val = f[n].subs_monomial(-1, 2 * d)
            cs[2 * n * d] = -val if (sign < 0 and n % 2) else val
        out = series_mul(out, TruncSeries(cs, order).pow_poly(expo))
    return out


def chi_gu_T_transform(level: int, order: int, arith: ArithFn = DEFAULT_ARITH) -> TruncSeries:
    """Start from ``1 + x`` and transform up to the requested level.

    Going from level ``r`` to ``r + 1`` uses sign ``(-1)^r``.
    """
    _check_level(level)
    f = TruncSeries([1, 1], order)
    for r in range(1, level):
        f = t_transform(f, -1 if r % 2 else 1, arith)
    return f


# -- dispatch -------------------------------------------------------------------


def _series_values(s: TruncSeries, order: int) -> list[IntPoly]:
    return [s[n].to_int() for n in range(order + 1)]


def chi_gu_pipeline(method: str, level: int, order: int, arith: ArithFn = DEFAULT_ARITH) -> list[IntPoly]:
    """``-chi_{level}(GU(n,q))`` for ``n = 0..order`` by the named route.

    ``arith`` only matters for the routes that use the polynomial counts.
    """
    if method == "closed":
        return _series_values(fgl_minus_closed(level, order), order)
    if method == "direct":
        return [chi_gu_direct(n, level) for n in range(order + 1)]
    if method == "exp":
        return _series_values(chi_gu_exp(level, order), order)
    if method == "recursion":
        return chi_gu_recursion(level, order)
    if method == "infprod":
        return _series_values(chi_gu_infprod(level, order), order)
    if method == "classtype":
        table = EulerTable(arith)
        return [_ONE] + [chi_gu_classtype(n, level, table) for n in range(1, order + 1)]
    if method == "transform":
        return _series_values(chi_gu_T_transform(level, order, arith), order)
    raise ValueError(f"unknown method {method!r}")


PIPELINES = ("closed", "direct", "exp", "recursion", "infprod", "classtype", "transform")


def chi_gu(n: int, level: int) -> IntPoly:
    """``-chi_{level}(GU(n,q))`` via the closed form."""
    return fgl_minus_closed(level, n)[n].to_int()


# -- primary series ---------------------------------------------------------------


def p_primary_series(p: int, q: int, level: int, order: int) -> list[int]:
    """Coefficients ``n = 1..order`` of the p-primary generating function at ``q``.

    ``q`` may be negative (formal evaluation); ``|q| >= 2`` is required.
    """
    r = _check_level(level)
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if abs(q) < 2:
        raise ValueError("need |q| >= 2")
    a = [0] + [(-1) ** (n + 1) * p_part(q**n - (-1) ** n, p) ** r for n in range(1, order + 1)]
    c: list[Fraction] = [Fraction(1)]
    for n in range(1, order + 1):
        c.append(sum((a[k] * c[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        if c[-1].denominator != 1:
            raise NonIntegralError(f"p-primary coefficient at n={n} is {c[-1]}")
    return [int(x) for x in c[1:]]


# -- verifiers -----------------------------------------------------------------------


def divisibility_factor(n: int, r: int) -> IntPoly:
    f = (Q + 1) ** (r - 1)
    if r % 2 == 1:
        f = f * Q ** (n - 1)
    return f


@dataclass
class DivisibilityReport:
    n: int
    r: int
    divisible: bool
    quotient: RatPoly | None
    remainder: RatPoly

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "divisible": self.divisible,
            "quotient": self.quotient.to_json() if self.quotient is not None else None,
            "remainder": self.remainder.to_json(),
        }


def verify_divisibility(n: int, r: int, value: IntPoly | None = None) -> DivisibilityReport:
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")
    if value is None:
        value = chi_gu(n, r)
    quot, rem = value.divmod(divisibility_factor(n, r))
    ok = rem.is_zero() and quot.is_integral()
    return DivisibilityReport(n, r, ok, quot if rem.is_zero() else None, rem)


@dataclass
class IdentityReport:
    name: str
    n: int
    r: int | None
    lhs: RatPoly
    rhs: RatPoly
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "r": self.r,
            "passed": self.passed,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }


def verify_identity_qregular(n: int, arith: ArithFn = DEFAULT_ARITH) -> IdentityReport:
    """Two counts of semisimple classes: ``q^n + q^{n-1}`` versus the class-type sum."""
    rhs = classtype_sum(n, lambda m, d: _ONE, lambda m, d: _ONE, arith)
    return IdentityReport("qregular-classes", n, None, Q**n + Q ** (n - 1), rhs)


def verify_master_identity(n: int, r: int, arith: ArithFn = DEFAULT_ARITH) -> IdentityReport:
    """Composition sum at level ``r+2`` against the class-type sum of level ``r+1`` sums."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    lhs = chi_gu_direct(n, r + 2)
    gu_cache: dict[int, IntPoly] = {}
    gl_cache: dict[int, IntPoly] = {}

    def minus_value(m: int, d: int) -> RatPoly:
        if m not in gu_cache:
            gu_cache[m] = chi_gu_direct(m, r + 1)
        return gu_cache[m].compose_power(d)

    def plus_value(m: int, d: int) -> RatPoly:
        if m not in gl_cache:
            gl_cache[m] = chi_gl_direct(m, r + 1)
        return gl_cache[m].compose_power(2 * d)

    rhs = classtype_sum(n, minus_value, plus_value, arith)
    return IdentityReport("master-identity", n, r, lhs, rhs)
