# errors.py — единая иерархия ошибок проекта
# ------------------------------------------
from __future__ import annotations

# коды выхода CLI
EXIT_EQUAL = 0
EXIT_NOT_EQUAL = 1
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_INTERNAL = 70


class MMVError(Exception):
    """Базовая ошибка. exit_code — что вернёт CLI."""

    exit_code: int = EXIT_INTERNAL


# ── арифметика ──────────────────────────────────────────────────────────────
class NoPrimeInRange(MMVError):
    pass


class NotInvertible(MMVError, ZeroDivisionError):
    pass


class TooLarge(MMVError):
    pass


class OrderUnavailable(MMVError):
    pass


class MagnitudeOverflow(MMVError, OverflowError):
    pass


class FieldTooSmall(MMVError):
    pass


class CapExceeded(MMVError):
    pass


class TooLargeForOracle(MMVError):
    pass


class NoWitness(MMVError):
    pass


# ── входные данные ──────────────────────────────────────────────────────────
class DataError(MMVError, ValueError):
    exit_code = EXIT_DATA


class DimMismatch(DataError):
    pass


class RingMismatch(DataError):
    pass


class DegeneratePoints(DataError):
    pass


class NotAllZeroesForm(DataError):
    pass


class ConfigError(DataError):
    pass


class ParseError(DataError):
    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column


class InvalidParameter(MMVError, ValueError):
    """Нарушено предусловие числового параметра (t, eps, rounds …)."""

    exit_code = EXIT_USAGE
