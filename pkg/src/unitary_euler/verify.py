"""Named identity suites run by ``unitary-euler verify``.

Every suite returns a :class:`SuiteResult`; a suite passes iff every
individual case holds exactly.  Suites take an :class:`ArithFn` so that the
counting functions can be perturbed to confirm a suite actually detects a
wrong input.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from sympy import divisors

from .arith import DEFAULT_ARITH, ArithFn, count_A, count_A_minus, count_A_plus
from .euler import (
    PIPELINES,
    chi_gl_direct,
    chi_gu_direct,
    chi_gu_pipeline,
    fgl_minus_closed,
    fgl_plus_closed,
    t_transform,
    verify_divisibility,
    verify_identity_qregular,
    verify_master_identity,
)
from .polyq import IntPoly, NonIntegralError, Q, RatPoly
from .series import TruncSeries, series_binomial_factor, series_mul, series_substitute

__all__ = ["SuiteResult", "SUITES", "run_suites"]

_ONE = IntPoly([1])


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, label: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label)

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "suite": self.name,
            "verdict": "pass" if self.passed else "fail",
            "cases": self.cases,
            "failures": self.failures,
        }
        if timings:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 10
    r_max: int = 7
    order: int = 12
    arith: ArithFn = DEFAULT_ARITH


def _pipelines(cfg: SuiteConfig, res: SuiteResult) -> None:
    for level in range(1, cfg.r_max + 1):
        ref = chi_gu_pipeline("closed", level, cfg.n_max)
        for method in PIPELINES[1:]:
            try:
                got = chi_gu_pipeline(method, level, cfg.n_max, cfg.arith)
            except NonIntegralError:
                res.check(False, f"{method} level={level}: non-integral value")
                continue
            for n in range(1, cfg.n_max + 1):
                res.check(got[n] == ref[n], f"{method} n={n} level={level}")


def _gu_gl(cfg: SuiteConfig, res: SuiteResult) -> None:
    for level in range(1, min(cfg.r_max, 6) + 1):
        plus = fgl_plus_closed(level, cfg.n_max)
        swapped = series_substitute(plus.map(lambda c: c.subs_monomial(-1, 1)), (-1) ** level, 1)
        res.check(swapped == fgl_minus_closed(level, cfg.n_max), f"series level={level}")
        for n in range(1, cfg.n_max + 1):
            gl = chi_gl_direct(n, level).subs_monomial(-1, 1)
            sign = (-1) ** (n * level)
            res.check(chi_gu_direct(n, level) == gl * sign, f"n={n} level={level}")


def _product(factors: list[TruncSeries], order: int) -> TruncSeries:
    out = TruncSeries.one(order)
    for f in factors:
        out = series_mul(out, f)
    return out


def _power_of_monomial_factor(sign: int, d: int, expo: RatPoly, order: int) -> TruncSeries:
    """``(1 + sign x^d)^expo`` for a polynomial exponent."""
    cs: list[RatPoly] = [IntPoly()] * (order + 1)
    cs[0] = _ONE
    if d <= order:
        cs[d] = IntPoly([sign])
    return TruncSeries(cs, order).pow_poly(expo)


def _zeta(cfg: SuiteConfig, res: SuiteResult) -> None:
    N = cfg.order
    lhs = _product([_power_of_monomial_factor(-1, d, -cfg.arith.A(d), N) for d in range(1, N + 1)], N)
    rhs = series_mul(series_binomial_factor(-1, 1, N), series_binomial_factor(-Q, -1, N))
    res.check(lhs == rhs, f"product over degrees to order {N}")


def _selfdual_generating(cfg: SuiteConfig, res: SuiteResult) -> None:
    N = cfg.order
    factors = []
    for d in range(1, N + 1):
        e = cfg.arith.minus(d)
        if e.is_zero():
            continue
        factors.append(_power_of_monomial_factor(1, d, e, N))
        factors.append(_power_of_monomial_factor(-1, d, -e, N))
    lhs = _product(factors, N)
    rhs = _product(
        [
            series_binomial_factor(1, 1, N),
            series_binomial_factor(Q, 1, N),
            series_binomial_factor(-1, -1, N),
            series_binomial_factor(-Q, -1, N),
        ],
        N,
    )
    res.check(lhs == rhs, f"product over odd degrees to order {N}")


def _count_relations(cfg: SuiteConfig, res: SuiteResult) -> None:
    ar = cfg.arith
    for d in range(1, cfg.order + 1):
        res.check(ar.plus(d) * 2 + ar.minus(d) == ar.A(d).compose_power(2), f"2A+ + A- = A(q^2) d={d}")
        if d % 2 == 0:
            res.check(ar.minus(d).is_zero(), f"A- vanishes d={d}")
        elif d > 1:
            res.check(ar.minus(d) == ar.A(d), f"A- = A d={d}")
        if d > 1:
            res.check(ar.plus(d) == ar.A(2 * d), f"A+ = A(2d) d={d}")
    res.check(ar.minus(1) == Q + 1, "A-(1) = q+1")
    res.check(ar.plus(1) == Q * (Q - 1) / 2 - 1, "A+(1) = q(q-1)/2 - 1")


def _variant_euler(cfg: SuiteConfig, res: SuiteResult) -> None:
    N = cfg.order
    c = _product(
        [
            series_binomial_factor(1, 1, N),
            series_binomial_factor(Q, 1, N),
            series_binomial_factor(-1, -1, N),
            series_binomial_factor(-Q, -1, N),
        ],
        N,
    )
    a = c.log_derivative()
    for n in range(1, N + 1):
        expected: RatPoly = IntPoly()
        for d in divisors(n):
            if (n // d) % 2:
                expected = expected + cfg.arith.minus(d) * (2 * d)
        for q in (2, 3, 4):
            res.check(a[n - 1](q) == expected(q), f"n={n} q={q}")


def _qregular(cfg: SuiteConfig, res: SuiteResult) -> None:
    for n in range(1, min(cfg.n_max, 8) + 1):
        res.check(verify_identity_qregular(n, cfg.arith).passed, f"n={n}")


def _master(cfg: SuiteConfig, res: SuiteResult) -> None:
    for r in range(0, 4):
        for n in range(1, min(cfg.n_max, 5) + 1):
            res.check(verify_master_identity(n, r, cfg.arith).passed, f"n={n} r={r}")


def _divisibility(cfg: SuiteConfig, res: SuiteResult) -> None:
    for r in range(1, cfg.r_max + 1):
        for n in range(1, cfg.n_max + 1):
            res.check(verify_divisibility(n, r).divisible, f"n={n} level={r}")


def _transform_anchors(cfg: SuiteConfig, res: SuiteResult) -> None:
    N = cfg.order
    one_plus = TruncSeries([1, 1], N)
    one_minus = TruncSeries([1, -1], N)
    res.check(
        t_transform(one_plus, -1, cfg.arith)
        == series_mul(series_binomial_factor(Q, 1, N), series_binomial_factor(-1, -1, N)),
        "T-(1+x) = (1+qx)/(1-x)",
    )
    res.check(
        t_transform(one_minus, 1, cfg.arith)
        == series_mul(series_binomial_factor(-Q, 1, N), series_binomial_factor(1, -1, N)),
        "T+(1-x) = (1-qx)/(1+x)",
    )


def _integrality(cfg: SuiteConfig, res: SuiteResult) -> None:
    for level in range(1, cfg.r_max + 1):
        s = fgl_minus_closed(level, cfg.n_max)
        for n in range(cfg.n_max + 1):
            res.check(s[n].is_integral(), f"closed n={n} level={level}")
    for d in range(1, cfg.order + 1):
        for name, fn in (("A", count_A), ("A-", count_A_minus), ("A+", count_A_plus)):
            res.check(fn(d).is_integer_valued(), f"{name}({d}) integer-valued")


SUITES: dict[str, Callable[[SuiteConfig, SuiteResult], None]] = {
    "pipeline-agreement": _pipelines,
    "gu-gl-sign-relation": _gu_gl,
    "zeta-identity": _zeta,
    "selfdual-generating-identity": _selfdual_generating,
    "counting-relations": _count_relations,
    "variant-euler-transform": _variant_euler,
    "qregular-classes": _qregular,
    "master-identity": _master,
    "divisibility": _divisibility,
    "transform-anchors": _transform_anchors,
    "integrality": _integrality,
}


def run_suites(
    n_max: int = 10,
    r_max: int = 7,
    order: int = 12,
    arith: ArithFn = DEFAULT_ARITH,
    only: list[str] | None = None,
) -> list[SuiteResult]:
    cfg = SuiteConfig(n_max, r_max, order, arith)
    names = list(SUITES) if only is None else only
    out = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        res = SuiteResult(name)
        t0 = time.perf_counter()
        try:
            SUITES[name](cfg, res)
        except (NonIntegralError, ArithmeticError) as exc:
            res.failures.append(f"raised {type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out
