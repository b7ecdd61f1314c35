import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()


# ── вспомогательное ─────────────────────────────────────────────────────────
def _parse_int(raw: str | None, default: int) -> int:
    """'64' → 64; пусто / мусор → default."""
    if raw is None:
        return default
    raw = raw.strip()
    if raw.startswith("-") and raw[1:].isdigit():
        return int(raw)
    return int(raw) if raw.isdigit() else default


def _parse_size(raw: str | None, default: int) -> int:
    """Допускает запись степенью двойки: '2^40' или '2**40'."""
    if raw is None:
        return default
    raw = raw.strip().replace("**", "^")
    if "^" in raw:
        base, _, exp = raw.partition("^")
        if base.strip().isdigit() and exp.strip().isdigit():
            return int(base) ** int(exp)
        return default
    return _parse_int(raw, default)


# ── значения по умолчанию ───────────────────────────────────────────────────
DEFAULT_TILE = 64
DEFAULT_KW_CAP = 256
DEFAULT_EXT_CAP = 2 ** 40
DEFAULT_INSTANCE_POOL = 16


# ── dataclass Config ────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Config:
    threads: int              # 0 = auto
    tile: int                 # размер блока в matmul
    kw_cap: int               # предел n для Korec–Wiedermann
    ext_cap: int              # максимальный размер поля расширения
    instance_pool: int        # сколько разных planted-инстансов на ячейку бенча
    db_path: str | None
    log_level: str

    @property
    def workers(self) -> int:
        if self.threads > 0:
            return self.threads
        return os.cpu_count() or 1


def load_config() -> Config:
    # читаем окружение при каждом вызове: тесты меняют его через monkeypatch
    return Config(
        threads       = max(0, _parse_int(os.getenv("MMV_THREADS"), 0)),
        tile          = max(1, _parse_int(os.getenv("MMV_TILE"), DEFAULT_TILE)),
        kw_cap        = _parse_int(os.getenv("MMV_KW_CAP"), DEFAULT_KW_CAP),
        ext_cap       = _parse_size(os.getenv("MMV_EXT_CAP"), DEFAULT_EXT_CAP),
        instance_pool = max(1, _parse_int(os.getenv("MMV_INSTANCE_POOL"), DEFAULT_INSTANCE_POOL)),
        db_path       = os.getenv("MMV_DB_PATH") or None,
        log_level     = os.getenv("MMV_LOG_LEVEL", "INFO").upper(),
    )
