# tests/test_db.py
import asyncio
import logging
import sqlite3

from db import Database
from harness import bench_run, load_bench_config

CONFIG = '{"seed": 11, "trials": 3, "grid": {"alg": ["exact", "rand-sparse"], "n": [3], "s": [1], "eps": ["1/4"]}}'


async def _record_and_read(path):
    config = load_bench_config(CONFIG)
    rows = await bench_run(config, threads=1)
    db = Database(str(path))
    await db.connect()
    try:
        first = await db.record_run(config, rows, 1)
        second = await db.record_run(config, rows, 4)
        return rows, first, second, await db.get_run(first), await db.get_rows(first), await db.list_runs(limit=1)
    finally:
        await db.close()


def test_record_run_round_trip(tmp_path):
    rows, first, second, run, stored, latest = asyncio.run(_record_and_read(tmp_path / "h.db"))
    assert second == first + 1
    assert run["seed"] == 11 and run["threads"] == 1
    assert (run["ring"], run["trials"]) == ("int:1024", 3)
    assert [r["position"] for r in stored] == [0, 1]
    assert [r["alg"] for r in stored] == ["exact", "rand-sparse"]
    assert stored[0]["eps"] is None and stored[1]["eps"] == "1/4"
    assert stored[1]["random_bits_mean"] == rows[1].random_bits_mean
    assert [r["run_id"] for r in latest] == [second]


def test_reconnect_keeps_schema(tmp_path, caplog):
    caplog.set_level(logging.WARNING, logger="db")
    path = tmp_path / "h.db"

    async def scenario():
        for _ in range(2):
            db = Database(str(path))
            await db.connect()
            await db.close()
        db = Database(str(path))
        await db.connect()
        try:
            return await db.get_run(1), await db.list_runs()
        finally:
            await db.close()

    assert asyncio.run(scenario()) == (None, [])
    assert not [r for r in caplog.records if "migration skipped" in r.getMessage()]


def test_old_history_file_is_upgraded(tmp_path):
    path = tmp_path / "old.db"
    with sqlite3.connect(path) as conn:
        conn.execute(
            "CREATE TABLE bench_runs (run_id INTEGER PRIMARY KEY AUTOINCREMENT, config_json TEXT NOT NULL,"
            " seed INTEGER NOT NULL, threads INTEGER NOT NULL, created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP)"
        )
        conn.execute("INSERT INTO bench_runs (config_json, seed, threads) VALUES ('{}', 7, 2)")

    async def scenario():
        config = load_bench_config(CONFIG)
        db = Database(str(path))
        await db.connect()
        try:
            new_id = await db.record_run(config, await bench_run(config, threads=1), 1)
            return await db.get_run(1), await db.get_run(new_id)
        finally:
            await db.close()

    old, new = asyncio.run(scenario())
    assert old["seed"] == 7 and old["ring"] is None and old["trials"] is None
    assert (new["ring"], new["trials"]) == ("int:1024", 3)
