"""Brute-force ground truth on explicit finite fields and unitary groups."""

from __future__ import annotations

from .brute import chi_r_bruteforce, chi_r_p_primary_bruteforce, qregular_class_count
from .budget import BUDGET_ENV, DEFAULT_BUDGET, Budget, BudgetExceeded, default_budget
from .field import FieldTable, build_field
from .poset import FinitePoset, chain_counts, random_poset, reduced_euler_char
from .report import (
    OracleCheck,
    OracleReport,
    check_equivariant,
    check_group_order,
    check_qregular,
    check_selfdual,
)
from .selfdual import FILTERS, enumerate_selfdual, is_selfdual
from .unitary import (
    SubspacePoset,
    UnitaryGeometry,
    UnitaryGroup,
    enumerate_GU,
    gu_order,
    prime_power,
    totally_isotropic_poset,
)

__all__ = [
    "BUDGET_ENV",
    "DEFAULT_BUDGET",
    "Budget",
    "BudgetExceeded",
    "FILTERS",
    "FieldTable",
    "FinitePoset",
    "OracleCheck",
    "OracleReport",
    "SubspacePoset",
    "UnitaryGeometry",
    "UnitaryGroup",
    "build_field",
    "chain_counts",
    "check_equivariant",
    "check_group_order",
    "check_qregular",
    "check_selfdual",
    "chi_r_bruteforce",
    "chi_r_p_primary_bruteforce",
    "default_budget",
    "enumerate_GU",
    "enumerate_selfdual",
    "gu_order",
    "is_selfdual",
    "prime_power",
    "qregular_class_count",
    "random_poset",
    "reduced_euler_char",
    "totally_isotropic_poset",
]
