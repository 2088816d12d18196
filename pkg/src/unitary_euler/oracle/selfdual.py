"""Exhaustive counts of (self-dual) monic polynomials over F_{q^2}.

The dual of a monic ``f = sum a_i x^i`` of degree ``m`` with ``a_0 != 0``
has roots the inverse q-th powers of the roots of ``f``.  Self-duality is
decided from the coefficients alone:
``a_m^q * (a_0, ..., a_m) = a_0 * (a_m^q, ..., a_0^q)``.
"""

from __future__ import annotations

from itertools import product

from .budget import Budget
from .field import FieldTable, build_field
from .unitary import prime_power

__all__ = ["FILTERS", "enumerate_selfdual", "is_selfdual", "dual_polynomial", "unitary_field"]

FILTERS = ("all", "irreducible", "irreducible-selfdual", "dual-pairs")

Poly = tuple[int, ...]


def unitary_field(q: int) -> FieldTable:
    p, e = prime_power(q)
    return build_field(p, 2 * e)


def is_selfdual(f: Poly, F: FieldTable, q: int) -> bool:
    m = len(f) - 1
    am_q = F.pow(f[m], q)
    a0 = f[0]
    return all(F.mul(am_q, f[i]) == F.mul(a0, F.pow(f[m - i], q)) for i in range(m + 1))


def dual_polynomial(f: Poly, F: FieldTable, q: int) -> Poly:
    """Monic dual: coefficients ``a_{m-i}^q / a_0^q``."""
    m = len(f) - 1
    c = F.inv(F.pow(f[0], q))
    return tuple(F.mul(c, F.pow(f[m - i], q)) for i in range(m + 1))


def _monic(F: FieldTable, m: int, nonzero_constant: bool = True):
    for low in product(range(F.size), repeat=m):
        if nonzero_constant and m and low[0] == 0:
            continue
        yield tuple(low) + (1,)


def _mul(a: Poly, b: Poly, F: FieldTable) -> Poly:
    add, mul = F.add_table, F.mul_table
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][mul[x][y]]
    return tuple(out)


def _reducibles(F: FieldTable, m: int) -> set[Poly]:
    """All monic degree-``m`` products of two monic factors of positive degree."""
    out: set[Poly] = set()
    for d in range(1, m // 2 + 1):
        left = list(_monic(F, d, nonzero_constant=False))
        right = list(_monic(F, m - d, nonzero_constant=False))
        for a in left:
            for b in right:
                out.add(_mul(a, b, F))
    return out


def _has_factor(f: Poly, divisors: list[Poly], F: FieldTable) -> bool:
    for g in divisors:
        rem = list(f)
        d = len(g) - 1
        for t in range(len(rem) - 1, d - 1, -1):
            c = rem[t]
            if c:
                for i in range(d + 1):
                    rem[t - d + i] = F.sub(rem[t - d + i], F.mul(c, g[i]))
        if not any(rem[:d]):
            return True
    return False


def enumerate_selfdual(q: int, m: int, filter: str = "all", budget: Budget | None = None) -> int:
    """Count monic degree-``m`` polynomials over F_{q^2} with nonzero constant term.

    ``all``                   self-dual ones
    ``irreducible``           irreducible ones
    ``irreducible-selfdual``  irreducible self-dual ones
    ``dual-pairs``            unordered pairs {f, dual f} of irreducibles with f != dual f
    """
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    if m < 1:
        raise ValueError("degree must be positive")
    budget = budget or Budget()
    F = unitary_field(q)
    budget.require(F.size**m, "polynomial count")
    if filter == "all":
        return sum(1 for f in _monic(F, m) if is_selfdual(f, F, q))
    if filter == "irreducible-selfdual":
        # Few candidates: trial-divide the self-dual ones by all low-degree monics.
        divisors = [g for d in range(1, m // 2 + 1) for g in _monic(F, d, nonzero_constant=False)]
        return sum(1 for f in _monic(F, m) if is_selfdual(f, F, q) and not _has_factor(f, divisors, F))
    budget.require(F.size**m * max(1, m // 2), "factor products")
    reducible = _reducibles(F, m)
    irreducible = [f for f in _monic(F, m) if f not in reducible]
    if filter == "irreducible":
        return len(irreducible)
    non_selfdual = sum(1 for f in irreducible if not is_selfdual(f, F, q))
    return non_selfdual // 2
