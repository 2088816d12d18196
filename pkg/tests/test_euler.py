from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import pytest

from unitary_euler.arith import ArithFn, count_A_plus
from unitary_euler.euler import (
    PIPELINES,
    EulerTable,
    chi_gl_direct,
    chi_gu,
    chi_gu_classtype,
    chi_gu_direct,
    chi_gu_exp,
    chi_gu_infprod,
    chi_gu_pipeline,
    chi_gu_recursion,
    chi_gu_T_transform,
    divisibility_factor,
    fgl_minus_closed,
    fgl_plus_closed,
    gen_binom,
    p_primary_series,
    t_transform,
    verify_divisibility,
    verify_identity_qregular,
    verify_master_identity,
)
from unitary_euler.polyq import IntPoly, Q
from unitary_euler.series import TruncSeries, series_binomial_factor, series_mul

from .golden import CHI4_QUOTIENTS, FIG2, GU2_QUOTIENTS, GU3_QUOTIENTS, PPRIMARY

N = 10


def test_gen_binom():
    assert gen_binom(-1, 3) == -1
    assert gen_binom(-3, 2) == 6
    assert gen_binom(4, 2) == 6
    assert gen_binom(3, -1) == 0


def test_fgl_minus_examples():
    assert fgl_minus_closed(1, N) == TruncSeries([1, 1], N)
    assert fgl_minus_closed(2, N) == series_mul(series_binomial_factor(Q, 1, N), series_binomial_factor(-1, -1, N))
    three = series_mul(
        series_mul(series_binomial_factor(Q**2, 1, N), series_binomial_factor(1, 1, N)),
        series_binomial_factor(-Q, -2, N),
    )
    assert fgl_minus_closed(3, N) == three


def test_fgl_plus_examples():
    assert fgl_plus_closed(1, N) == TruncSeries([1, -1], N)
    two = fgl_plus_closed(2, N)
    assert all(two[n] == 1 - Q for n in range(1, N + 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_direct_low_levels(n):
    assert chi_gu_direct(n, 2) == Q + 1
    assert chi_gu_direct(n, 3) == Q ** (n - 1) * (Q + 1) ** 2 * n
    assert chi_gu_direct(n, 1) == (1 if n == 1 else 0)


def test_direct_level_four_rank_two():
    assert chi_gu_direct(2, 4) == (Q + 1) ** 3 * (3 * Q**2 + 1)


def test_exp_examples():
    assert chi_gu_exp(2, 6).evaluate(2)[1:] == [3] * 6
    assert chi_gu_exp(3, 6).evaluate(2)[1:] == [9, 36, 108, 288, 720, 1728]
    assert chi_gu_exp(1, 6) == TruncSeries([1, 1], 6)


def test_recursion_examples():
    two = chi_gu_recursion(2, N)
    assert two[0] == 1 and all(v == Q + 1 for v in two[1:])
    assert chi_gu_recursion(4, 3)[3] == (Q + 1) ** 3 * (6 * Q**4 + Q**3 + 3 * Q**2 + 1)
    assert chi_gu_recursion(5, 4)[4](2) == 1826064


def test_infprod_examples():
    for level in range(1, 7):
        assert chi_gu_infprod(level, N) == fgl_minus_closed(level, N)
    assert chi_gu_infprod(2, 3)[1] == Q + 1
    assert chi_gu_infprod(1, 5) == TruncSeries([1, 1], 5)


def test_classtype_rank_two_and_three():
    table = EulerTable()
    for r, coeffs in zip(range(2, 7), GU2_QUOTIENTS):
        assert chi_gu_classtype(2, r, table) == IntPoly(coeffs) * (Q + 1) ** (r - 1)
    for r, coeffs in zip(range(2, 7), GU3_QUOTIENTS):
        assert chi_gu_classtype(3, r, table) == IntPoly(coeffs) * (Q + 1) ** (r - 1)


def test_classtype_rank_one():
    for level in range(1, 8):
        assert chi_gu_classtype(1, level) == (Q + 1) ** (level - 1)


def test_classtype_detects_perturbed_counts():
    bad = EulerTable(ArithFn({("plus", 1): count_A_plus(1) + 1}))
    assert bad.gu(2, 3) != chi_gu(2, 3)


def test_euler_table_concurrent_reads_are_consistent():
    table = EulerTable()
    cells = [(n, r) for r in range(2, 6) for n in range(1, 7)]
    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(lambda c: table.gu(*c), cells))
    assert got == [chi_gu(n, r) for n, r in cells]
    assert ("GU", 3, 4) in table
    assert table.get("GL", 2, 2) == 1 - Q
    with pytest.raises(ValueError):
        table.get("SL", 1, 1)


def test_transform_examples():
    N12 = 12
    assert t_transform(TruncSeries([1, 1], N12), -1) == fgl_minus_closed(2, N12)
    expected = series_mul(series_binomial_factor(-Q, 1, N12), series_binomial_factor(1, -1, N12))
    assert t_transform(TruncSeries([1, -1], N12), 1) == expected
    assert t_transform(fgl_minus_closed(2, N12), 1) == fgl_minus_closed(3, N12)
    with pytest.raises(ValueError):
        t_transform(TruncSeries([1, 1], 4), 0)


def test_transform_parity_is_pinned():
    # The opposite sign assignment does not reproduce the closed form.
    wrong = t_transform(TruncSeries([1, 1], 8), 1)
    assert wrong != fgl_minus_closed(2, 8)


@pytest.mark.parametrize("level", range(1, 8))
def test_pipelines_agree(level):
    ref = chi_gu_pipeline("closed", level, N)
    for method in PIPELINES[1:]:
        assert chi_gu_pipeline(method, level, N) == ref, method


def test_unknown_pipeline():
    with pytest.raises(ValueError):
        chi_gu_pipeline("magic", 2, 3)
    with pytest.raises(ValueError):
        fgl_minus_closed(0, 3)


@pytest.mark.parametrize("level", range(1, 7))
def test_gu_gl_sign_relation(level):
    for n in range(1, N + 1):
        assert chi_gu_direct(n, level) == chi_gl_direct(n, level).subs_monomial(-1, 1) * (-1) ** (n * level)
        assert chi_gl_direct(n, level) == fgl_plus_closed(level, N)[n]


def test_transform_route_matches_class_types():
    assert chi_gu_T_transform(5, 6) == fgl_minus_closed(5, 6)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_figure_two(q):
    for r, row in FIG2[q].items():
        s = fgl_minus_closed(r, 6).evaluate(q)
        assert s[1:] == row


@pytest.mark.parametrize("key", sorted(PPRIMARY))
def test_pprimary_figures(key):
    p, level = key
    for q, row in PPRIMARY[key].items():
        assert p_primary_series(p, q, level, len(row)) == row


def test_pprimary_examples():
    assert p_primary_series(2, 3, 2, 6) == [4, 4, -4, -12, -12, -4]
    assert p_primary_series(3, 2, 2, 5) == [3, 3, 3, 6, 6]
    for level in range(2, 6):
        assert p_primary_series(2, 2, level, 6) == [1, 0, 0, 0, 0, 0]
    for p, q in [(2, 3), (3, 2), (5, 7), (2, -9)]:
        assert p_primary_series(p, q, 1, 6) == [1, 0, 0, 0, 0, 0]


def test_pprimary_input_checks():
    with pytest.raises(ValueError):
        p_primary_series(4, 3, 2, 3)
    with pytest.raises(ValueError):
        p_primary_series(2, 1, 2, 3)


def test_pprimary_full_part_recovers_ordinary_values():
    # If q^n - (-1)^n is a power of p for every n <= N, nothing is lost.
    assert p_primary_series(3, 2, 3, 2) == [9, 36]


def test_divisibility_examples():
    rep = verify_divisibility(5, 3)
    assert rep.divisible and rep.quotient == 5
    assert verify_divisibility(2, 2).quotient == 1
    rep = verify_divisibility(10, 4)
    assert rep.divisible and rep.quotient == IntPoly(CHI4_QUOTIENTS[9])
    assert rep.to_json()["divisible"] is True
    assert divisibility_factor(3, 3) == (Q + 1) ** 2 * Q**2


def test_divisibility_reports_failure():
    rep = verify_divisibility(2, 3, value=Q + 1)
    assert not rep.divisible and rep.quotient is None


@pytest.mark.parametrize("n", range(1, 11))
def test_chi4_quotient_table(n):
    assert chi_gu(n, 4).exact_div((Q + 1) ** 3) == IntPoly(CHI4_QUOTIENTS[n - 1])


@pytest.mark.parametrize("r", range(1, 8))
def test_divisibility_range(r):
    for n in range(1, N + 1):
        assert verify_divisibility(n, r).divisible


@pytest.mark.parametrize("n", range(1, 9))
def test_qregular_identity(n):
    rep = verify_identity_qregular(n)
    assert rep.passed
    assert rep.to_json()["name"] == "qregular-classes"


def test_qregular_identity_small_cases():
    A = ArithFn()
    assert verify_identity_qregular(1).rhs == A.minus(1)
    two = A.minus(1) + A.minus(1) * (A.minus(1) - 1) / 2 + A.plus(1)
    assert verify_identity_qregular(2).rhs == two


def test_qregular_identity_detects_mutation():
    bad = ArithFn({("plus", 1): count_A_plus(1) + 1})
    assert not verify_identity_qregular(2, bad).passed


def test_master_identity_worked_examples():
    A = ArithFn()
    c2 = A.minus(1) * (A.minus(1) - 1) / 2
    rep = verify_master_identity(2, 0)
    assert rep.lhs == Q + 1 == c2 - A.plus(1) and rep.passed
    rep = verify_master_identity(2, 1)
    assert rep.lhs == 2 * Q**3 + 4 * Q**2 + 2 * Q
    assert rep.rhs == A.minus(1) * (1 + Q) + c2 * (1 + Q) ** 2 + A.plus(1) * (1 - Q**2)
    rep = verify_master_identity(2, 2)
    assert rep.lhs == IntPoly([1, 3, 6, 10, 9, 3]) and rep.passed


@pytest.mark.parametrize("r", range(0, 4))
def test_master_identity_range(r):
    for n in range(1, 6):
        assert verify_master_identity(n, r).passed


@pytest.mark.parametrize("method", PIPELINES)
def test_pipeline_outputs_are_integral(method):
    for v in chi_gu_pipeline(method, 6, 8):
        assert isinstance(v, IntPoly) and v.is_integral()
