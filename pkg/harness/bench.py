# harness/bench.py — оценка частоты ошибок и CSV-таблица сравнения
# -----------------------------------------------------------------
"""Испытания разбрасываются по потокам через run_in_executor; результат
не зависит от числа потоков: seed испытания выводится из индекса, а
агрегаты — целочисленные суммы.
"""
from __future__ import annotations

import asyncio
import csv
import io
import itertools
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from config import load_config
from errors import ConfigError, InvalidParameter, MMVError
from harness.planted import PlantedConfig, gen_planted
from ring import RingSpec, parse_ring
from verify import VERIFIERS, Verdict, VerifyParams, derive_seed, mix64, run_verifier
from verify.instance import Instance

logger = logging.getLogger(__name__)

CSV_HEADER = (
    "alg",
    "ring",
    "n",
    "t",
    "eps",
    "trials",
    "false_accepts",
    "random_bits_mean",
    "elem_ops_mean",
    "wall_nanos_mean",
)
DETERMINISTIC_COLUMNS = CSV_HEADER[:-1]


@dataclass(frozen=True)
class BenchRow:
    alg: str
    ring: str
    n: int
    t: int
    eps: Fraction | None
    trials: int
    false_accepts: int
    random_bits_total: int
    elem_ops_total: int
    wall_nanos_total: int

    def __post_init__(self) -> None:
        if not 0 <= self.false_accepts <= self.trials:
            raise ValueError(f"false_accepts {self.false_accepts} outside 0..{self.trials}")

    @property
    def failure_rate(self) -> float:
        return self.false_accepts / self.trials

    @property
    def random_bits_mean(self) -> float:
        return self.random_bits_total / self.trials

    @property
    def elem_ops_mean(self) -> float:
        return self.elem_ops_total / self.trials

    @property
    def wall_nanos_mean(self) -> float:
        return self.wall_nanos_total / self.trials

    def as_csv(self) -> list[str]:
        return [
            self.alg,
            self.ring,
            str(self.n),
            str(self.t),
            "" if self.eps is None else str(self.eps),
            str(self.trials),
            str(self.false_accepts),
            f"{self.random_bits_mean:.4f}",
            f"{self.elem_ops_mean:.4f}",
            f"{self.wall_nanos_mean:.1f}",
        ]


# ── испытания ───────────────────────────────────────────────────────────────
def _is_wrong(verdict: Verdict, s: int) -> bool:
    # s ≥ 1 — AB ≠ C, ошибка только «Equal»; s = 0 — ошибкой был бы «NotEqual»
    return verdict.equal if s > 0 else not verdict.equal


def _trial(alg: str, inst: Instance, params: VerifyParams) -> Verdict:
    return run_verifier(alg, inst, params)


async def estimate_failure_rate(
    alg: str,
    cfg: PlantedConfig,
    params: VerifyParams,
    trials: int,
    *,
    executor: ThreadPoolExecutor | None = None,
    pool: int | None = None,
) -> BenchRow:
    """trials испытаний; false_accepts — число вердиктов, расходящихся с истиной.

    Экземпляры берутся из пула (i mod pool), seed верификатора у каждого
    испытания свой.
    """
    if trials < 1:
        raise InvalidParameter(f"trials must be ≥ 1, got {trials}")
    if alg not in VERIFIERS:
        raise InvalidParameter(f"unknown algorithm {alg!r}")
    pool = min(trials, pool or load_config().instance_pool)
    own = executor is None
    executor = executor or ThreadPoolExecutor(max_workers=load_config().workers)
    loop = asyncio.get_running_loop()
    try:
        instances = await asyncio.gather(
            *(
                loop.run_in_executor(
                    executor,
                    gen_planted,
                    PlantedConfig(cfg.n, cfg.ring, cfg.s, derive_seed(cfg.seed, i)),
                )
                for i in range(pool)
            )
        )
        trial_seed = mix64(cfg.seed)
        verdicts = await asyncio.gather(
            *(
                loop.run_in_executor(
                    executor,
                    _trial,
                    alg,
                    instances[i % pool],
                    VerifyParams(params.t, params.eps, params.rounds, derive_seed(trial_seed, i)),
                )
                for i in range(trials)
            )
        )
    finally:
        if own:
            executor.shutdown(wait=True)

    t = params.promise(instances[0])
    return BenchRow(
        alg=alg,
        ring=cfg.ring.token,
        n=cfg.n,
        t=t,
        eps=params.eps if alg == "rand-sparse" else None,
        trials=trials,
        false_accepts=sum(_is_wrong(v, cfg.s) for v in verdicts),
        random_bits_total=sum(v.stats.random_bits for v in verdicts),
        elem_ops_total=sum(v.stats.elem_ops for v in verdicts),
        wall_nanos_total=sum(v.stats.wall_nanos for v in verdicts),
    )


# ── конфигурация бенча ──────────────────────────────────────────────────────
@dataclass(frozen=True)
class BenchCell:
    alg: str
    n: int
    s: int
    eps: Fraction
    t: int


@dataclass(frozen=True)
class BenchConfig:
    seed: int
    trials: int
    ring: RingSpec
    rounds: int = 1
    grid: dict = field(default_factory=dict)
    raw: str = "{}"

    def cells(self) -> list[BenchCell]:
        """Декартово произведение alg × n × s × eps × t в порядке файла."""
        axes = [self.grid.get(key, []) for key in ("alg", "n", "s", "eps", "t")]
        out = []
        for alg, n, s, eps, t in itertools.product(*axes):
            s_val = _resolve(s, n=n, s=None, what="s")
            t_val = _resolve(t, n=n, s=s_val, what="t")
            if not 0 <= s_val <= n * n:
                raise ConfigError(f"s = {s_val} outside 0..{n * n} for n = {n}")
            if not 0 <= t_val <= n * n:
                raise ConfigError(f"t = {t_val} outside 0..{n * n} for n = {n}")
            out.append(BenchCell(alg, n, s_val, _eps(eps), t_val))
        return out


def _resolve(value, *, n: int, s: int | None, what: str) -> int:
    if isinstance(value, bool):
        raise ConfigError(f"{what} entry {value!r} is not an integer")
    if isinstance(value, int):
        return value
    if value == "n":
        return n
    if value == "s" and s is not None:
        return s
    raise ConfigError(f"{what} entry {value!r} must be an integer, 'n' or 's'")


def _eps(value) -> Fraction:
    try:
        eps = Fraction(str(value)) if isinstance(value, float) else Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad eps {value!r}: {exc}") from exc
    if not 0 < eps <= Fraction(1, 2):
        raise ConfigError(f"eps {value!r} outside (0, 1/2]")
    return eps


def load_bench_config(text: str) -> BenchConfig:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"bench config is not JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("bench config must be a JSON object")
    try:
        ring = parse_ring(str(raw.get("ring", "int:1024")))
    except MMVError as exc:
        raise ConfigError(str(exc)) from exc
    grid = raw.get("grid", {})
    if not isinstance(grid, dict) or any(not isinstance(v, list) for v in grid.values()):
        raise ConfigError("grid must map axis names to lists")
    unknown = set(grid) - {"alg", "n", "s", "eps", "t"}
    if unknown:
        raise ConfigError(f"unknown grid axes: {', '.join(sorted(unknown))}")
    for alg in grid.get("alg", []):
        if alg not in VERIFIERS:
            raise ConfigError(f"unknown algorithm {alg!r} in grid")
    for n in grid.get("n", []):
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ConfigError(f"n entry {n!r} must be a positive integer")
    grid = {"s": [0], "eps": ["1/2"], "t": ["s"], **grid}
    for key in ("seed", "trials", "rounds"):
        value = raw.get(key, 1 if key != "seed" else 0)
        if isinstance(value, bool) or not isinstance(value, int) or value < (0 if key == "seed" else 1):
            raise ConfigError(f"{key} must be a {'non-negative' if key == 'seed' else 'positive'} integer")
    return BenchConfig(
        seed=raw.get("seed", 0),
        trials=raw.get("trials", 1),
        ring=ring,
        rounds=raw.get("rounds", 1),
        grid=grid,
        raw=json.dumps(raw, sort_keys=True),
    )


async def bench_run(config: BenchConfig, *, threads: int | None = None) -> list[BenchRow]:
    """Все ячейки сетки по порядку; испытания каждой ячейки — параллельно."""
    cells = config.cells()
    workers = threads or load_config().workers
    rows = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for position, cell in enumerate(cells):
            cfg = PlantedConfig(cell.n, config.ring, cell.s, derive_seed(config.seed, position))
            params = VerifyParams(cell.t, cell.eps, config.rounds, 0)
            row = await estimate_failure_rate(cell.alg, cfg, params, config.trials, executor=executor)
            logger.info(
                "%s %s n=%d s=%d t=%d: %d/%d wrong, bits %.2f",
                cell.alg,
                config.ring.token,
                cell.n,
                cell.s,
                cell.t,
                row.false_accepts,
                row.trials,
                row.random_bits_mean,
            )
            rows.append(row)
    return rows


def to_csv(rows: list[BenchRow], *, include_wall: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = CSV_HEADER if include_wall else DETERMINISTIC_COLUMNS
    writer.writerow(header)
    for row in rows:
        writer.writerow(row.as_csv()[: len(header)])
    return buf.getvalue()
