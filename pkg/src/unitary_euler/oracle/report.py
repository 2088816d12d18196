"""Brute force versus formula comparisons, packaged as JSON-ready reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from ..arith import count_A, count_A_minus, count_A_plus, selfdual_monic_count
from ..euler import chi_gu, p_primary_series
from .brute import chi_r_bruteforce, chi_r_p_primary_bruteforce, qregular_class_count
from .budget import Budget
from .selfdual import FILTERS, enumerate_selfdual
from .unitary import UnitaryGroup, gu_order

__all__ = [
    "OracleCheck",
    "OracleReport",
    "check_equivariant",
    "check_group_order",
    "check_selfdual",
    "check_qregular",
]


@dataclass
class OracleCheck:
    name: str
    inputs: dict
    brute: int
    formula: int
    seconds: float | None = None

    @property
    def passed(self) -> bool:
        return self.brute == self.formula

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "check": self.name,
            "inputs": self.inputs,
            "brute": self.brute,
            "formula": self.formula,
            "verdict": "pass" if self.passed else "fail",
        }
        if timings and self.seconds is not None:
            out["seconds"] = round(self.seconds, 4)
        return out


@dataclass
class OracleReport:
    checks: list[OracleCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timings: bool = False) -> dict:
        return {
            "verdict": "pass" if self.passed else "fail",
            "checks": [c.to_json(timings) for c in self.checks],
        }


def _timed(name: str, inputs: dict, brute: Callable[[], int], formula: Callable[[], int]) -> OracleCheck:
    t0 = time.perf_counter()
    b = brute()
    elapsed = time.perf_counter() - t0
    return OracleCheck(name, inputs, int(b), int(formula()), elapsed)


def check_equivariant(n: int, q: int, r: int, p: int | None = None, budget: Budget | None = None) -> OracleCheck:
    """Brute-force ``-chi~_r`` (or its p-primary variant) against the formula side."""
    if p is None:
        return _timed(
            "equivariant-euler",
            {"n": n, "q": q, "r": r},
            lambda: chi_r_bruteforce(n, q, r, budget),
            lambda: chi_gu(n, r)(q),
        )
    return _timed(
        "p-primary-euler",
        {"n": n, "q": q, "r": r, "p": p},
        lambda: chi_r_p_primary_bruteforce(n, q, r, p, budget),
        lambda: p_primary_series(p, q, r, n)[n - 1],
    )


def check_group_order(n: int, q: int, budget: Budget | None = None) -> OracleCheck:
    return _timed(
        "group-order",
        {"n": n, "q": q},
        lambda: len(UnitaryGroup(n, q, budget)),
        lambda: gu_order(n, q),
    )


_SELFDUAL_FORMULAS = {
    "all": lambda q, m: selfdual_monic_count(m)(q),
    "irreducible": lambda q, m: count_A(m)(q * q),
    "irreducible-selfdual": lambda q, m: count_A_minus(m)(q),
    "dual-pairs": lambda q, m: count_A_plus(m)(q),
}


def check_selfdual(q: int, m: int, filters=FILTERS, budget: Budget | None = None) -> list[OracleCheck]:
    return [
        _timed(
            f"polynomials-{f}",
            {"q": q, "m": m},
            lambda f=f: enumerate_selfdual(q, m, f, budget),
            lambda f=f: _SELFDUAL_FORMULAS[f](q, m),
        )
        for f in filters
    ]


def check_qregular(n: int, q: int, budget: Budget | None = None) -> OracleCheck:
    return _timed(
        "qregular-classes",
        {"n": n, "q": q},
        lambda: qregular_class_count(n, q, budget),
        lambda: q**n + q ** (n - 1),
    )
