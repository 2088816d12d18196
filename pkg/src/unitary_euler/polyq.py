"""Exact dense univariate polynomials in ``q`` over the rationals.

A :class:`RatPoly` stores integer numerators together with one positive
common denominator, so arithmetic stays in machine-friendly integers.
:class:`IntPoly` is the same object with the denominator pinned to 1.

Both are immutable and hashable; equality is structural because every
constructor brings the data into canonical form (no trailing zeros,
``gcd(numerators, denominator) == 1``).
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial, gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "NonIntegralError",
    "RatPoly",
    "IntPoly",
    "poly_arith",
    "poly_eval",
    "poly_compose_power",
    "poly_multinomial",
    "Q",
]


class NonIntegralError(ArithmeticError):
    """Raised when a polynomial expected to be integral has a denominator."""


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                if ai:
                    out[i + j] += ai * bj
    return out


class RatPoly:
    """Polynomial in q with exact rational coefficients."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, coeffs: Iterable[int | Fraction] = ()):
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for c in fracs:
            den = den * c.denominator // gcd(den, c.denominator)
        num = [int(c * den) for c in fracs]
        self._set(num, den)

    def _set(self, num: list[int], den: int) -> None:
        num = _trim(num)
        if not num:
            den = 1
        else:
            g = den
            for c in num:
                g = gcd(g, c)
                if g == 1:
                    break
            if g != 1:
                num = [c // g for c in num]
                den //= g
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, num: list[int], den: int = 1) -> RatPoly:
        if den < 0:
            num, den = [-c for c in num], -den
        out = object.__new__(cls)
        out._set(num, den)
        return out

    @classmethod
    def constant(cls, c: int | Fraction) -> RatPoly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: int | Fraction = 1) -> RatPoly:
        return cls([0] * k + [c])

    # -- accessors -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._num) - 1

    def is_zero(self) -> bool:
        return not self._num

    def is_integral(self) -> bool:
        return self._den == 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._num):
            return Fraction(self._num[k], self._den)
        return Fraction(0)

    def is_integer_valued(self) -> bool:
        """True iff the polynomial maps every integer to an integer.

        Checking ``deg + 1`` consecutive integers suffices (binomial basis).
        """
        if self._den == 1:
            return True
        return all(self(a).denominator == 1 for a in range(len(self._num)))

    def ensure_integer_valued(self) -> RatPoly:
        if not self.is_integer_valued():
            raise NonIntegralError(f"polynomial {self} is not integer-valued")
        return self

    def to_int(self) -> IntPoly:
        if self._den != 1:
            raise NonIntegralError(f"polynomial {self} has denominator {self._den}")
        if type(self) is IntPoly:
            return self
        return IntPoly._raw(list(self._num), 1)

    # -- arithmetic ------------------------------------------------------

    def _result_type(self, other: RatPoly) -> type:
        return IntPoly if type(self) is IntPoly and type(other) is IntPoly else RatPoly

    @staticmethod
    def _coerce(x) -> RatPoly | None:
        if isinstance(x, RatPoly):
            return x
        if isinstance(x, int):
            return IntPoly._raw([x], 1)
        if isinstance(x, Rational):
            f = Fraction(x)
            return RatPoly._raw([f.numerator], f.denominator)
        return None

    def __add__(self, other) -> RatPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = self._den * o._den // gcd(self._den, o._den)
        fa, fb = den // self._den, den // o._den
        n = max(len(self._num), len(o._num))
        a = list(self._num) + [0] * (n - len(self._num))
        for i, c in enumerate(o._num):
            a[i] = a[i] * fa + c * fb if i < len(self._num) else c * fb
        for i in range(len(o._num), len(self._num)):
            a[i] *= fa
        return self._result_type(o)._raw(a, den)

    __radd__ = __add__

    def __neg__(self) -> RatPoly:
        return type(self)._raw([-c for c in self._num], self._den)

    def __sub__(self, other) -> RatPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> RatPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> RatPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._result_type(o)._raw(_convolve(self._num, o._num), self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatPoly:
        if isinstance(other, RatPoly):
            if other.degree != 0:
                return NotImplemented
            other = other[0]
        f = Fraction(other)
        if f == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return RatPoly._raw([c * f.denominator for c in self._num], self._den * f.numerator)

    def __pow__(self, k: int) -> RatPoly:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result: RatPoly = IntPoly._raw([1]) if type(self) is IntPoly else RatPoly._raw([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: RatPoly) -> tuple[RatPoly, RatPoly]:
        """Euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other[dq]
        oc = other.coeffs
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for i in range(dq + 1):
                    rem[k - dq + i] -= c * oc[i]
        return RatPoly(quot), RatPoly(rem[:dq] if dq else [])

    def exact_div(self, other: RatPoly) -> RatPoly:
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot

    # -- substitution and evaluation ------------------------------------

    def __call__(self, a):
        """Evaluate exactly at an integer or rational (Horner)."""
        acc = 0
        for c in reversed(self._num):
            acc = acc * a + c
        if self._den == 1:
            return acc
        return Fraction(acc, self._den)

    def subs_monomial(self, sign: int, d: int) -> RatPoly:
        """Substitute ``q -> sign * q**d``."""
        if d < 1:
            raise ValueError("exponent must be positive")
        out = [0] * (d * (len(self._num) - 1) + 1) if self._num else []
        for i, c in enumerate(self._num):
            out[i * d] = c if (sign > 0 or i % 2 == 0) else -c
        return type(self)._raw(out, self._den)

    def compose_power(self, d: int) -> RatPoly:
        return self.subs_monomial(1, d)

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._num)

    # -- rendering -------------------------------------------------------

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "q") -> str:
        if not self._num:
            return "0"
        terms = []
        for k in range(len(self._num) - 1, -1, -1):
            c = Fraction(self._num[k], self._den)
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}" if a.denominator != 1 else f"{a}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    # -- serialization ---------------------------------------------------

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str] | str) -> RatPoly:
        if isinstance(data, str):
            data = json.loads(data)
        p = RatPoly(Fraction(s) for s in data)
        return p.to_int() if cls is IntPoly else p


class IntPoly(RatPoly):
    """A :class:`RatPoly` whose coefficients are all integers."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable[int | Fraction] = ()):
        super().__init__(coeffs)
        if self._den != 1:
            raise NonIntegralError(f"non-integral coefficients: {self.coeffs}")

    @property
    def int_coeffs(self) -> tuple[int, ...]:
        return self._num


Q = IntPoly([0, 1])


def poly_arith(a: RatPoly, b, op: str) -> RatPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op in ("mul", "scalar-mul"):
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_eval(p: RatPoly, a):
    return p(a)


def poly_compose_power(p: RatPoly, d: int) -> RatPoly:
    return p.compose_power(d)


def poly_multinomial(p: RatPoly, exponents: Sequence[int]) -> RatPoly:
    """Falling-factorial multinomial ``p(p-1)...(p-s+1) / prod(e_i!)``, ``s = sum(e_i)``."""
    total = sum(exponents)
    num: RatPoly = IntPoly([1])
    for i in range(total):
        num = num * (p - i)
    den = 1
    for e in exponents:
        if e < 0:
            raise ValueError("multinomial exponents must be nonnegative")
        den *= factorial(e)
    return num / den if den != 1 else num
