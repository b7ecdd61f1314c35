# tests/test_config.py
import os

from config import DEFAULT_EXT_CAP, DEFAULT_KW_CAP, DEFAULT_TILE, load_config


def test_defaults():
    cfg = load_config()
    assert (cfg.threads, cfg.tile, cfg.kw_cap, cfg.ext_cap) == (0, DEFAULT_TILE, DEFAULT_KW_CAP, DEFAULT_EXT_CAP)
    assert cfg.db_path is None
    assert cfg.workers == (os.cpu_count() or 1)


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MMV_THREADS", "4")
    monkeypatch.setenv("MMV_TILE", "16")
    monkeypatch.setenv("MMV_EXT_CAP", "2^20")
    monkeypatch.setenv("MMV_DB_PATH", "runs.db")
    monkeypatch.setenv("MMV_LOG_LEVEL", "debug")
    cfg = load_config()
    assert cfg.workers == 4 and cfg.tile == 16
    assert cfg.ext_cap == 2 ** 20
    assert cfg.db_path == "runs.db"
    assert cfg.log_level == "DEBUG"


def test_garbage_falls_back(monkeypatch):
    monkeypatch.setenv("MMV_THREADS", "many")
    monkeypatch.setenv("MMV_TILE", "0")
    monkeypatch.setenv("MMV_EXT_CAP", "2^x")
    monkeypatch.setenv("MMV_INSTANCE_POOL", "-3")
    cfg = load_config()
    assert cfg.threads == 0
    assert cfg.tile == 1
    assert cfg.ext_cap == DEFAULT_EXT_CAP
    assert cfg.instance_pool == 1
