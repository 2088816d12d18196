"""Direct evaluation of the equivariant Euler characteristics on explicit groups."""

from __future__ import annotations

from sympy import isprime

from .budget import Budget
from .unitary import SubspacePoset, UnitaryGroup, equivariant_sum

__all__ = ["chi_r_bruteforce", "chi_r_p_primary_bruteforce", "qregular_class_count"]


def _normalized(n: int, q: int, r: int, p: int | None, budget: Budget | None) -> int:
    if r < 1:
        raise ValueError("r must be at least 1")
    budget = budget or Budget()
    G = UnitaryGroup(n, q, budget)
    P = SubspacePoset(G.geom, budget)
    later = None if p is None else (lambda a: G.is_p_element(a, p))
    total = equivariant_sum(G, P, r, later, budget)
    value, rem = divmod(total, len(G))
    if rem:
        raise ArithmeticError(f"normalized sum {total}/{len(G)} is not an integer")
    return -value


def chi_r_bruteforce(n: int, q: int, r: int, budget: Budget | None = None) -> int:
    """``-chi~_r(GU(n,q))`` from commuting ``r``-tuples acting on the building.

    The sign matches the tabulated values, which are all ``-chi~``.
    """
    return _normalized(n, q, r, None, budget)


def chi_r_p_primary_bruteforce(n: int, q: int, r: int, p: int, budget: Budget | None = None) -> int:
    """Like :func:`chi_r_bruteforce` with coordinates 2..r restricted to p-elements."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return _normalized(n, q, r, p, budget)


def qregular_class_count(n: int, q: int, budget: Budget | None = None) -> int:
    """Number of distinct characteristic polynomials of elements of order prime to q."""
    G = UnitaryGroup(n, q, budget)
    geom = G.geom
    return len({geom.charpoly(g) for i, g in enumerate(G.elements) if G.is_regular(i)})
