"""Explicit general unitary groups and their buildings over tiny fields.

The space is ``F_{q^2}^n`` with the form ``B(u, v) = sum_i a_i u_i v_{n+1-i}^q``
whose Gram matrix ``A`` is antidiagonal with entries ``+1, -1, +1, ...``.
Matrices act on row vectors from the right, so ``g`` is unitary iff
``g A conj(g)^T = A``, i.e. iff the rows of ``g`` have Gram matrix ``A``.
Groups are enumerated row by row under exactly that constraint.

Subspaces are stored by their reduced row-echelon basis, which makes
equality structural.  Matrices are flat tuples in row-major order.
"""

from __future__ import annotations

from itertools import permutations, product
from math import comb, gcd
from typing import Callable, Iterable

from sympy import factorint

from .budget import Budget
from .field import FieldTable, build_field
from .poset import FinitePoset

__all__ = [
    "prime_power",
    "gu_order",
    "UnitaryGeometry",
    "UnitaryGroup",
    "SubspacePoset",
    "enumerate_GU",
    "totally_isotropic_poset",
    "rref",
]

Vector = tuple[int, ...]
Matrix = tuple[int, ...]


def prime_power(q: int) -> tuple[int, int]:
    """``(p, e)`` with ``q = p**e``; raises for anything that is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, e), = f.items()
    return p, e


def gu_order(n: int, q: int) -> int:
    """``q^C(n,2) * prod_{i=1..n} (q^i - (-1)^i)``."""
    out = q ** comb(n, 2)
    for i in range(1, n + 1):
        out *= q**i - (-1) ** i
    return out


def rref(rows: Iterable[Vector], F: FieldTable) -> tuple[Vector, ...]:
    """Reduced row-echelon basis of the span of ``rows`` (zero rows dropped)."""
    m = [list(r) for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    add, mul = F.add_table, F.mul_table
    pivot_row = 0
    for col in range(ncols):
        piv = next((i for i in range(pivot_row, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        inv = F.inv(m[pivot_row][col])
        m[pivot_row] = [mul[inv][x] for x in m[pivot_row]]
        prow = m[pivot_row]
        for i in range(len(m)):
            if i != pivot_row and m[i][col]:
                c = F.neg(m[i][col])
                m[i] = [add[a][mul[c][b]] for a, b in zip(m[i], prow)]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(r) for r in m[:pivot_row])


class UnitaryGeometry:
    """The Hermitian space ``F_{q^2}^n`` together with its field tables."""

    def __init__(self, n: int, q: int):
        if n < 1:
            raise ValueError("n must be positive")
        p, e = prime_power(q)
        self.n, self.q, self.p = n, q, p
        self.F = build_field(p, 2 * e)
        if self.F.add_table is None:
            raise ValueError(f"q = {q} is too large for the table-based oracle")
        F = self.F
        self.conj_table = [F.conj(a) for a in F.elements]
        minus_one = F.neg(1)
        self.signs = [1 if i % 2 == 0 else minus_one for i in range(n)]
        gram = [0] * (n * n)
        for i in range(n):
            gram[i * n + (n - 1 - i)] = self.signs[i]
        self.gram: Matrix = tuple(gram)
        self.identity: Matrix = tuple(1 if i == j else 0 for i in range(n) for j in range(n))

    def form(self, u: Vector, v: Vector) -> int:
        n, add, mul, conj = self.n, self.F.add_table, self.F.mul_table, self.conj_table
        s = 0
        for i in range(n):
            a = u[i]
            if a:
                b = v[n - 1 - i]
                if b:
                    s = add[s][mul[mul[a][conj[b]]][self.signs[i]]]
        return s

    def vectors(self) -> Iterable[Vector]:
        return product(range(self.F.size), repeat=self.n)

    def matmul(self, a: Matrix, b: Matrix) -> Matrix:
        n, add, mul = self.n, self.F.add_table, self.F.mul_table
        out = []
        for i in range(n):
            row = a[i * n : (i + 1) * n]
            for j in range(n):
                s = 0
                for k in range(n):
                    x = row[k]
                    if x:
                        y = b[k * n + j]
                        if y:
                            s = add[s][mul[x][y]]
                out.append(s)
        return tuple(out)

    def conj_transpose(self, a: Matrix) -> Matrix:
        n, conj = self.n, self.conj_table
        return tuple(conj[a[j * n + i]] for i in range(n) for j in range(n))

    def is_unitary(self, g: Matrix) -> bool:
        return self.matmul(self.matmul(g, self.gram), self.conj_transpose(g)) == self.gram

    def rows(self, g: Matrix) -> list[Vector]:
        n = self.n
        return [g[i * n : (i + 1) * n] for i in range(n)]

    def act(self, basis: tuple[Vector, ...], g: Matrix) -> tuple[Vector, ...]:
        """Canonical basis of ``U g`` for ``U`` spanned by ``basis``."""
        n, add, mul = self.n, self.F.add_table, self.F.mul_table
        images = []
        for u in basis:
            w = [0] * n
            for k, x in enumerate(u):
                if x:
                    for j in range(n):
                        y = g[k * n + j]
                        if y:
                            w[j] = add[w[j]][mul[x][y]]
            images.append(tuple(w))
        return rref(images, self.F)

    def det(self, g: Matrix) -> int:
        F, n = self.F, self.n
        total = 0
        for perm in permutations(range(n)):
            term = 1
            for i, j in enumerate(perm):
                term = F.mul(term, g[i * n + j])
                if term == 0:
                    break
            if term:
                inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
                total = F.add(total, F.neg(term) if inversions % 2 else term)
        return total

    def charpoly(self, g: Matrix) -> tuple[int, ...]:
        """Coefficients (lowest degree first) of ``det(x I - g)``, by Laplace expansion."""
        F, n = self.F, self.n

        def padd(a, b):
            m = max(len(a), len(b))
            a = list(a) + [0] * (m - len(a))
            b = list(b) + [0] * (m - len(b))
            return [F.add(x, y) for x, y in zip(a, b)]

        def pmul(a, b):
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            out[i + j] = F.add(out[i + j], F.mul(x, y))
            return out

        def pneg(a):
            return [F.neg(x) for x in a]

        entries = [[[F.neg(g[i * n + j])] + ([1] if i == j else []) for j in range(n)] for i in range(n)]

        def det(rows: list[int], cols: list[int]):
            if len(rows) == 1:
                return entries[rows[0]][cols[0]]
            acc = [0]
            for idx, c in enumerate(cols):
                minor = det(rows[1:], cols[:idx] + cols[idx + 1 :])
                term = pmul(entries[rows[0]][c], minor)
                acc = padd(acc, pneg(term) if idx % 2 else term)
            return acc

        out = det(list(range(n)), list(range(n)))
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)


class UnitaryGroup:
    """All elements of GU(n, q), with cached products, inverses and orders."""

    def __init__(self, n: int, q: int, budget: Budget | None = None):
        budget = budget or Budget()
        self.order = gu_order(n, q)
        budget.require(self.order, f"|GU({n},{q})|")
        self.geom = geom = UnitaryGeometry(n, q)
        self.elements: list[Matrix] = _enumerate(geom)
        if len(self.elements) != self.order:
            raise AssertionError(
                f"enumerated {len(self.elements)} elements of GU({n},{q}), expected {self.order}"
            )
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.identity = self.index[geom.identity]
        gram_t = tuple(geom.gram[j * n + i] for i in range(n) for j in range(n))
        # g^-1 = A conj(g)^T A^T because A A^T = I.
        self.inverse = [
            self.index[geom.matmul(geom.matmul(geom.gram, geom.conj_transpose(g)), gram_t)]
            for g in self.elements
        ]
        self._mul: dict[tuple[int, int], int] = {}
        self._orders: dict[int, int] = {}
        self._primes = factorint(self.order)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        out = self._mul.get(key)
        if out is None:
            out = self.index[self.geom.matmul(self.elements[a], self.elements[b])]
            self._mul[key] = out
        return out

    def conjugate(self, h: int, x: int) -> int:
        """``h x h^-1``."""
        return self.mul(self.mul(h, x), self.inverse[h])

    def power(self, a: int, e: int) -> int:
        result, base = self.identity, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def element_order(self, a: int) -> int:
        """Order of an element, found by stripping primes from the group order."""
        cached = self._orders.get(a)
        if cached is not None:
            return cached
        o = self.order
        for ell in self._primes:
            while o % ell == 0 and self.power(a, o // ell) == self.identity:
                o //= ell
        self._orders[a] = o
        return o

    def is_p_element(self, a: int, p: int) -> bool:
        o = self.element_order(a)
        while o % p == 0:
            o //= p
        return o == 1

    def is_regular(self, a: int) -> bool:
        """Order prime to the defining characteristic."""
        return gcd(self.element_order(a), self.geom.p) == 1


def _enumerate(geom: UnitaryGeometry) -> list[Matrix]:
    n = geom.n
    gram = geom.gram
    vecs = [v for v in geom.vectors() if any(v)]
    form = geom.form
    out: list[Matrix] = []
    chosen: list[Vector] = []

    def rec(i: int) -> None:
        if i == n:
            out.append(tuple(x for row in chosen for x in row))
            return
        for v in vecs:
            if form(v, v) != gram[i * n + i]:
                continue
            if all(form(v, u) == gram[i * n + j] and form(u, v) == gram[j * n + i] for j, u in enumerate(chosen)):
                chosen.append(v)
                rec(i + 1)
                chosen.pop()

    rec(0)
    return out


def enumerate_GU(n: int, q: int, budget: Budget | None = None) -> list[Matrix]:
    return UnitaryGroup(n, q, budget).elements


class SubspacePoset:
    """Nontrivial totally isotropic subspaces ordered by inclusion."""

    def __init__(self, geom: UnitaryGeometry, budget: Budget | None = None):
        self.geom = geom
        budget = budget or Budget()
        budget.require(geom.F.size**geom.n, "vector count")
        F = geom.F
        iso = [v for v in geom.vectors() if any(v) and geom.form(v, v) == 0]
        layers: list[set[tuple[Vector, ...]]] = [{rref([v], F) for v in iso}]
        while True:
            nxt: set[tuple[Vector, ...]] = set()
            for U in layers[-1]:
                for v in iso:
                    if all(geom.form(v, u) == 0 for u in U):
                        W = rref(list(U) + [v], F)
                        if len(W) > len(U):
                            nxt.add(W)
            if not nxt:
                break
            layers.append(nxt)
        if not layers[0]:
            layers = []
        self.elements: list[tuple[Vector, ...]] = [U for layer in layers for U in sorted(layer)]
        self.index = {U: i for i, U in enumerate(self.elements)}
        below = []
        for i, W in enumerate(self.elements):
            below.append(
                {j for j, U in enumerate(self.elements[:i]) if len(U) < len(W) and rref(list(W) + list(U), F) == W}
            )
        self.poset = FinitePoset(len(self.elements), below)

    def __len__(self) -> int:
        return len(self.elements)

    def dims(self) -> list[int]:
        return [len(U) for U in self.elements]

    def is_isotropic(self, basis: tuple[Vector, ...]) -> bool:
        return all(self.geom.form(u, v) == 0 for u in basis for v in basis)

    def permutation(self, g: Matrix) -> tuple[int, ...]:
        return tuple(self.index[self.geom.act(U, g)] for U in self.elements)

    def reduced_euler_char(self, subset: Iterable[int] | None = None) -> int:
        return self.poset.reduced_euler_char(subset)


def totally_isotropic_poset(n: int, q: int, budget: Budget | None = None) -> SubspacePoset:
    return SubspacePoset(UnitaryGeometry(n, q), budget)


def equivariant_sum(
    G: UnitaryGroup,
    P: SubspacePoset,
    r: int,
    later: Callable[[int], bool] | None = None,
    budget: Budget | None = None,
) -> int:
    """``sum`` over commuting ``r``-tuples of ``chi~`` of the common fixed subposet.

    Tuples are built by centralizer descent.  At each depth the candidates
    range over the common centralizer ``H`` of the elements chosen so far;
    ``H`` preserves the current fixed subposet, so the contribution of
    ``x`` depends only on its ``H``-conjugacy class and each class is
    visited once with weight equal to its size.  ``later`` restricts every
    coordinate after the first.
    """
    budget = budget or Budget()
    perms = [P.permutation(g) for g in G.elements]
    budget.spend(len(G))

    def rec(H: list[int], fixed: tuple[int, ...], k: int, first: bool) -> int:
        if k == 0:
            return P.reduced_euler_char(fixed)
        total = 0
        seen: set[int] = set()
        for x in H:
            if x in seen or (not first and later is not None and not later(x)):
                continue
            orbit: set[int] = set()
            cent: list[int] = []
            for h in H:
                y = G.conjugate(h, x)
                orbit.add(y)
                if y == x:
                    cent.append(h)
            budget.spend(len(H))
            seen |= orbit
            px = perms[x]
            total += len(orbit) * rec(cent, tuple(i for i in fixed if px[i] == i), k - 1, False)
        return total

    return rec(list(range(len(G))), tuple(range(len(P))), r, True)
