"""Small explicit finite fields.

Elements of F_{p^k} are encoded as integers ``sum c_i p^i`` (``0 <= c_i < p``),
i.e. as coefficient vectors of polynomials modulo a fixed irreducible
modulus.  Multiplication goes through log/antilog tables built from a
primitive element; fields with at most 256 elements also get full addition
and multiplication tables, which is what the group enumeration uses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from sympy import factorint, isprime

__all__ = ["FieldTable", "build_field", "MAX_FIELD_SIZE"]

MAX_FIELD_SIZE = 1 << 16
_TABLE_LIMIT = 256


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        a, c = divmod(a, p)
        out.append(c)
    return out


def _undigits(cs, p: int) -> int:
    a = 0
    for c in reversed(cs):
        a = a * p + c
    return a


def _polymulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Product of two residues modulo the monic polynomial ``mod`` over F_p."""
    k = len(mod) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for t in range(len(prod) - 1, k - 1, -1):
        c = prod[t]
        if c:
            for i in range(k + 1):
                prod[t - k + i] = (prod[t - k + i] - c * mod[i]) % p
    return prod[:k]


def _is_irreducible_mod_p(mod: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(mod) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            div = list(low) + [1]
            rem = list(mod)
            for t in range(k, d - 1, -1):
                c = rem[t]
                if c:
                    for i in range(d + 1):
                        rem[t - d + i] = (rem[t - d + i] - c * div[i]) % p
            if not any(rem[:d]):
                return False
    return True


def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        mod = _digits(code, p, k) + [1]
        if mod[0] and _is_irreducible_mod_p(mod, p):
            return tuple(mod)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(eq=False)
class FieldTable:
    p: int
    k: int
    modulus: tuple[int, ...]
    primitive: int
    exp: list[int] = field(repr=False)
    log: list[int] = field(repr=False)
    add_table: list[list[int]] | None = field(default=None, repr=False)
    mul_table: list[list[int]] | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        p = self.p
        out, place = 0, 1
        while a or b:
            a, ca = divmod(a, p)
            b, cb = divmod(b, p)
            out += ((ca + cb) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        return _undigits([(-c) % p for c in _digits(a, p, self.k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.size - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(-self.log[a]) % (self.size - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.size - 1)]

    def frobenius(self, a: int, e: int = 1) -> int:
        """``a -> a^(p^e)``."""
        return self.pow(a, self.p**e)

    def conj(self, a: int) -> int:
        """The involution ``a -> a^(p^(k/2))`` of a field of even degree."""
        if self.k % 2:
            raise ValueError("conjugation needs an extension of even degree")
        return self.frobenius(a, self.k // 2)

    def subfield(self, e: int) -> list[int]:
        """Elements fixed by ``a -> a^(p^e)``."""
        return [a for a in self.elements if self.frobenius(a, e) == a]

    def from_int(self, c: int) -> int:
        """Image of an ordinary integer in the prime field."""
        return c % self.p

    def check_axioms(self) -> None:
        els = list(self.elements)
        for a in els:
            assert self.add(a, 0) == a and self.mul(a, 1) == a
            assert self.add(a, self.neg(a)) == 0
            if a:
                assert self.mul(a, self.inv(a)) == 1
            for b in els:
                assert self.add(a, b) == self.add(b, a)
                assert self.mul(a, b) == self.mul(b, a)
                for c in els:
                    assert self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                    assert self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                    assert self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))


def _find_primitive(p: int, k: int, mod: list[int]) -> tuple[int, list[int], list[int]]:
    size = p**k
    primes = list(factorint(size - 1)) if size > 2 else []
    for g in range(1, size):
        gd = _digits(g, p, k)
        # Build the powers of g once; g is primitive iff they hit every unit.
        exp = [1]
        cur = _digits(1, p, k)
        for _ in range(size - 2):
            cur = _polymulmod(cur, gd, mod, p)
            exp.append(_undigits(cur, p))
        if len(set(exp)) == size - 1:
            log = [0] * size
            for i, a in enumerate(exp):
                log[a] = i
            assert all(exp[(size - 1) // ell] != 1 for ell in primes)
            return g, exp, log
    raise AssertionError("no primitive element found")  # pragma: no cover


def build_field(p: int, k: int = 1) -> FieldTable:
    """Deterministic model of F_{p^k} using the least irreducible modulus."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    if p**k > MAX_FIELD_SIZE:
        raise ValueError(f"field of order {p}^{k} exceeds the supported size {MAX_FIELD_SIZE}")
    mod = list(_least_irreducible(p, k))
    g, exp, log = _find_primitive(p, k, mod)
    F = FieldTable(p, k, tuple(mod), g, exp, log)
    if F.size <= _TABLE_LIMIT:
        els = range(F.size)
        F.add_table = [[F.add(a, b) for b in els] for a in els]
        F.mul_table = [[F.mul(a, b) for b in els] for a in els]
    if F.size <= 16:
        F.check_axioms()
    return F
