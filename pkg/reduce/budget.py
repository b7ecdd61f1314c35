# reduce/budget.py — сколько уравнений дают тесты L_i X R_i = 0
# --------------------------------------------------------------
"""Семейство тестов L_i ∈ F^{n^α×n}, R_i ∈ F^{n×n^β} может подтвердить
X = 0 только если суммарно даёт ≥ n² уравнений. Число тестов постоянно,
поэтому асимптотически решает наибольший показатель α + β.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from errors import InvalidParameter

TARGET_EXPONENT = Fraction(2)


def _exponent(value) -> Fraction:
    exp = Fraction(str(value)) if isinstance(value, float) else Fraction(value)
    if not 0 <= exp <= 1:
        raise InvalidParameter(f"exponent {value} outside [0, 1]")
    return exp


@dataclass(frozen=True)
class BudgetSpec:
    tests: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tests", tuple((_exponent(a), _exponent(b)) for a, b in self.tests))

    @classmethod
    def of(cls, pairs: Iterable[tuple]) -> "BudgetSpec":
        return cls(tuple(pairs))

    @property
    def exponents(self) -> list[Fraction]:
        return [a + b for a, b in self.tests]


@dataclass(frozen=True)
class BudgetVerdict:
    sufficient: bool
    deficit: Fraction = Fraction(0)

    def __str__(self) -> str:
        return "Sufficient" if self.sufficient else f"Insufficient(deficit {self.deficit})"


def budget_audit(spec: BudgetSpec) -> BudgetVerdict:
    """Sufficient ⟺ max(α_i + β_i) ≥ 2; иначе дефицит 2 − max."""
    c_max = max(spec.exponents, default=Fraction(0))
    if c_max >= TARGET_EXPONENT:
        return BudgetVerdict(True)
    return BudgetVerdict(False, TARGET_EXPONENT - c_max)


def budget_equations(spec: BudgetSpec, n: int) -> float:
    """Σ n^(α_i + β_i) для конкретного n."""
    if n < 1:
        raise InvalidParameter(f"n must be ≥ 1, got {n}")
    return sum(float(n) ** float(c) for c in spec.exponents)
