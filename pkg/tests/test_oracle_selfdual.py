from __future__ import annotations

import pytest

from unitary_euler.arith import count_A, count_A_minus, count_A_plus, selfdual_monic_count
from unitary_euler.oracle import check_selfdual, enumerate_selfdual, is_selfdual
from unitary_euler.oracle.selfdual import dual_polynomial, unitary_field


def test_examples():
    assert enumerate_selfdual(2, 2, "all") == 6
    assert enumerate_selfdual(2, 2, "irreducible-selfdual") == 0
    assert enumerate_selfdual(2, 1, "irreducible-selfdual") == 3


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_selfdual_monic(q, m):
    assert enumerate_selfdual(q, m, "all") == selfdual_monic_count(m)(q)


@pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (3, 4), (3, 5)])
def test_irreducible_selfdual(q, m):
    got = enumerate_selfdual(q, m, "irreducible-selfdual")
    assert got == count_A_minus(m)(q)
    if m % 2 == 0:
        assert got == 0


@pytest.mark.parametrize("q,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_irreducibles_and_pairs(q, m):
    assert enumerate_selfdual(q, m, "irreducible") == count_A(m)(q * q)
    assert enumerate_selfdual(q, m, "dual-pairs") == count_A_plus(m)(q)


def test_dual_is_involution():
    F = unitary_field(3)
    f = (2, 5, 1, 1)
    g = dual_polynomial(f, F, 3)
    assert dual_polynomial(g, F, 3) == f
    assert is_selfdual(f, F, 3) == (g == f)


def test_bad_filter():
    with pytest.raises(ValueError):
        enumerate_selfdual(2, 2, "everything")
    with pytest.raises(ValueError):
        enumerate_selfdual(2, 0)


def test_report_names():
    names = [c.name for c in check_selfdual(2, 2)]
    assert names == [
        "polynomials-all",
        "polynomials-irreducible",
        "polynomials-irreducible-selfdual",
        "polynomials-dual-pairs",
    ]
