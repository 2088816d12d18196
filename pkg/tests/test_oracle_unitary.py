from __future__ import annotations

import pytest

from unitary_euler.euler import chi_gu, p_primary_series
from unitary_euler.oracle import (
    Budget,
    BudgetExceeded,
    UnitaryGroup,
    check_equivariant,
    check_group_order,
    chi_r_bruteforce,
    chi_r_p_primary_bruteforce,
    enumerate_GU,
    gu_order,
    prime_power,
    qregular_class_count,
    totally_isotropic_poset,
)
from unitary_euler.oracle.budget import BUDGET_ENV, default_budget


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    for bad in (1, 6, 0, -3):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_order_formula_examples():
    assert gu_order(1, 2) == 3
    assert gu_order(2, 2) == 18
    assert gu_order(3, 2) == 648


@pytest.mark.parametrize("n,q", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (1, 4), (1, 5)])
def test_enumeration_matches_order(n, q):
    G = enumerate_GU(n, q)
    assert len(G) == gu_order(n, q)
    assert len(set(G)) == len(G)


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2)])
def test_group_sanity(n, q):
    G = UnitaryGroup(n, q)
    geom = G.geom
    F = geom.F
    for i, g in enumerate(G.elements):
        assert geom.is_unitary(g)
        assert F.pow(geom.det(g), q + 1) == 1
        assert G.mul(i, G.inverse[i]) == G.identity
    assert G.element_order(G.identity) == 1
    assert all(G.order % G.element_order(i) == 0 for i in range(len(G)))


def test_isotropic_poset_examples():
    assert len(totally_isotropic_poset(1, 2)) == 0
    P = totally_isotropic_poset(2, 2)
    assert len(P) == 3 and set(P.dims()) == {1}
    assert P.reduced_euler_char() == 2
    P4 = totally_isotropic_poset(4, 2)
    assert set(P4.dims()) == {1, 2}


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2)])
def test_poset_is_isotropic_and_invariant(n, q):
    G = UnitaryGroup(n, q)
    P = totally_isotropic_poset(n, q)
    assert all(P.is_isotropic(U) for U in P.elements)
    for g in G.elements[:: max(1, len(G) // 40)]:
        perm = P.permutation(g)
        assert sorted(perm) == list(range(len(P)))
        assert all(P.is_isotropic(G.geom.act(U, g)) for U in P.elements)


def test_isotropic_line_counts():
    # (q^n - (-1)^n)(q^(n-1) - (-1)^(n-1)) / (q^2 - 1) isotropic points.
    for n, q in [(2, 2), (2, 3), (3, 2), (4, 2)]:
        P = totally_isotropic_poset(n, q)
        lines = sum(1 for d in P.dims() if d == 1)
        assert lines == (q**n - (-1) ** n) * (q ** (n - 1) - (-1) ** (n - 1)) // (q * q - 1)


@pytest.mark.parametrize(
    "n,q,r",
    [(1, 2, 1), (1, 2, 2), (1, 2, 3), (1, 2, 4), (1, 3, 2), (1, 3, 4), (2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2)],
)
def test_bruteforce_matches_formula(n, q, r):
    assert chi_r_bruteforce(n, q, r) == chi_gu(n, r)(q)


def test_bruteforce_examples():
    assert chi_r_bruteforce(1, 2, 2) == 3
    assert chi_r_bruteforce(2, 2, 2) == 3
    assert chi_r_bruteforce(2, 2, 3) == 36
    assert chi_r_bruteforce(3, 2, 2) == 3


@pytest.mark.parametrize("n,q", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_level_one_is_delta(n, q):
    assert chi_r_bruteforce(n, q, 1) == (1 if n == 1 else 0)


def test_p_primary_bruteforce():
    assert chi_r_p_primary_bruteforce(1, 3, 2, 2) == 4
    assert chi_r_p_primary_bruteforce(1, 2, 2, 3) == 3
    assert chi_r_p_primary_bruteforce(2, 2, 2, 2) == p_primary_series(2, 2, 2, 2)[1] == 0
    assert chi_r_p_primary_bruteforce(2, 3, 2, 2) == p_primary_series(2, 3, 2, 2)[1]
    with pytest.raises(ValueError):
        chi_r_p_primary_bruteforce(1, 3, 2, 4)


def test_qregular_counts():
    assert qregular_class_count(1, 3) == 4
    assert qregular_class_count(2, 2) == 6
    assert qregular_class_count(3, 2) == 12


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_GU(4, 3)
    with pytest.raises(BudgetExceeded):
        chi_r_bruteforce(3, 2, 2, Budget(100))
    b = Budget(5)
    b.spend(5)
    with pytest.raises(BudgetExceeded):
        b.spend()


def test_budget_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "42")
    assert default_budget() == 42
    monkeypatch.setenv(BUDGET_ENV, "x")
    with pytest.raises(ValueError):
        default_budget()


def test_reports():
    c = check_equivariant(2, 2, 3)
    assert c.passed and c.to_json()["brute"] == 36 and "seconds" not in c.to_json()
    assert "seconds" in c.to_json(timings=True)
    assert check_group_order(2, 3).to_json()["formula"] == 96
