# db.py  — история запусков бенча (SQLite)
# ----------------------------------------
from __future__ import annotations

import logging
import sqlite3
from typing import Dict, List, Optional

import aiosqlite

from harness.bench import BenchConfig, BenchRow

logger = logging.getLogger(__name__)


class Database:
    def __init__(self, path: str) -> None:
        self.path = path
        self.conn: aiosqlite.Connection | None = None

    # ---------- подключение и миграции ----------
    async def connect(self) -> None:
        self.conn = await aiosqlite.connect(self.path)
        self.conn.row_factory = aiosqlite.Row
        await self.conn.execute("PRAGMA foreign_keys = ON")
        await self._create_schema()
        await self._apply_migrations()
        await self.conn.commit()
        logger.info("bench history at %s", self.path)

    async def _create_schema(self) -> None:
        # RUNS ------------------------------------------------------------
        await self.conn.execute("""
            CREATE TABLE IF NOT EXISTS bench_runs (
                run_id      INTEGER PRIMARY KEY AUTOINCREMENT,
                config_json TEXT NOT NULL,
                seed        INTEGER NOT NULL,
                threads     INTEGER NOT NULL,
                created_at  TIMESTAMP DEFAULT CURRENT_TIMESTAMP
            );
        """)

        # ROWS ------------------------------------------------------------
        await self.conn.execute("""
            CREATE TABLE IF NOT EXISTS bench_rows (
                run_id           INTEGER NOT NULL REFERENCES bench_runs(run_id) ON DELETE CASCADE,
                position         INTEGER NOT NULL,   -- порядок в сетке
                alg              TEXT NOT NULL,
                ring             TEXT NOT NULL,
                n                INTEGER NOT NULL,
                t                INTEGER NOT NULL,
                eps              TEXT,               -- дробь "1/4" или NULL
                trials           INTEGER NOT NULL,
                false_accepts    INTEGER NOT NULL CHECK(false_accepts BETWEEN 0 AND trials),
                random_bits_mean REAL NOT NULL,
                elem_ops_mean    REAL NOT NULL,
                wall_nanos_mean  REAL NOT NULL,
                PRIMARY KEY(run_id, position)
            );
        """)

    async def _apply_migrations(self) -> None:
        migrations = [
            "ALTER TABLE bench_runs ADD COLUMN ring TEXT;",
            "ALTER TABLE bench_runs ADD COLUMN trials INTEGER;",
            "CREATE INDEX IF NOT EXISTS idx_bench_rows_alg ON bench_rows(alg, ring, n);",
        ]
        for sql in migrations:
            try:
                await self.conn.execute(sql)
            except sqlite3.OperationalError as e:
                # пропускаем «duplicate column» и «already exists»
                if "duplicate" not in str(e).lower() and "exists" not in str(e).lower():
                    logger.warning("migration skipped:\n%s\n%s", sql, e)

    # ---------- запись ----------
    async def record_run(self, config: BenchConfig, rows: List[BenchRow], threads: int) -> int:
        cur = await self.conn.execute(
            "INSERT INTO bench_runs (config_json, seed, threads, ring, trials) VALUES (?, ?, ?, ?, ?)",
            (config.raw, config.seed, threads, config.ring.token, config.trials),
        )
        run_id = cur.lastrowid
        await cur.close()
        await self.conn.executemany(
            """
            INSERT INTO bench_rows (run_id, position, alg, ring, n, t, eps, trials, false_accepts,
                                    random_bits_mean, elem_ops_mean, wall_nanos_mean)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
            """,
            [
                (
                    run_id,
                    position,
                    row.alg,
                    row.ring,
                    row.n,
                    row.t,
                    None if row.eps is None else str(row.eps),
                    row.trials,
                    row.false_accepts,
                    row.random_bits_mean,
                    row.elem_ops_mean,
                    row.wall_nanos_mean,
                )
                for position, row in enumerate(rows)
            ],
        )
        await self.conn.commit()
        logger.info("recorded bench run %d (%d rows)", run_id, len(rows))
        return run_id

    # ---------- чтение ----------
    async def get_run(self, run_id: int) -> Optional[Dict]:
        cur = await self.conn.execute("SELECT * FROM bench_runs WHERE run_id = ?", (run_id,))
        row = await cur.fetchone()
        await cur.close()
        return dict(row) if row else None

    async def get_rows(self, run_id: int) -> List[Dict]:
        cur = await self.conn.execute(
            "SELECT * FROM bench_rows WHERE run_id = ? ORDER BY position", (run_id,)
        )
        rows = await cur.fetchall()
        await cur.close()
        return [dict(r) for r in rows]

    async def list_runs(self, limit: int = 20) -> List[Dict]:
        cur = await self.conn.execute(
            "SELECT * FROM bench_runs ORDER BY run_id DESC LIMIT ?", (limit,)
        )
        rows = await cur.fetchall()
        await cur.close()
        return [dict(r) for r in rows]

    async def close(self) -> None:
        if self.conn:
            await self.conn.close()
            self.conn = None
