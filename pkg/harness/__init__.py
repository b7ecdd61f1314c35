# harness/__init__.py

from .bench import (
    CSV_HEADER,
    BenchConfig,
    BenchRow,
    bench_run,
    estimate_failure_rate,
    load_bench_config,
    to_csv,
)
from .instance_io import parse_instance, read_instance_file, write_instance, write_instance_file
from .planted import PlantedConfig, gen_planted
from .selfcheck import CheckResult, run_selfcheck

__all__ = [
    "CSV_HEADER",
    "BenchConfig",
    "BenchRow",
    "CheckResult",
    "PlantedConfig",
    "bench_run",
    "estimate_failure_rate",
    "gen_planted",
    "load_bench_config",
    "parse_instance",
    "read_instance_file",
    "run_selfcheck",
    "to_csv",
    "write_instance",
    "write_instance_file",
]
