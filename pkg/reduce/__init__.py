# reduce/__init__.py

from .budget import BudgetSpec, BudgetVerdict, budget_audit, budget_equations
from .reductions import (
    PROBLEMS,
    ROUTES,
    allzeroes_to_inverse,
    allzeroes_to_mmv,
    bcapo_to_allzeroes,
    inverse_to_mmv,
    kaz_to_kmmv,
    kmmv_to_kaz,
    kmmv_to_mmv,
    mcapo_to_mmv,
    mmv_to_allzeroes,
    mmv_to_kmmv,
    mmv_to_mps,
    mmv_to_symmetric,
    route,
)

__all__ = [
    "BudgetSpec",
    "BudgetVerdict",
    "PROBLEMS",
    "ROUTES",
    "allzeroes_to_inverse",
    "allzeroes_to_mmv",
    "bcapo_to_allzeroes",
    "budget_audit",
    "budget_equations",
    "inverse_to_mmv",
    "kaz_to_kmmv",
    "kmmv_to_kaz",
    "kmmv_to_mmv",
    "mcapo_to_mmv",
    "mmv_to_allzeroes",
    "mmv_to_kmmv",
    "mmv_to_mps",
    "mmv_to_symmetric",
    "route",
]
