import argparse
import asyncio
import logging
import sys
from pathlib import Path

from config import load_config
from db import Database
from errors import (
    EXIT_DATA,
    EXIT_EQUAL,
    EXIT_INTERNAL,
    EXIT_NOT_EQUAL,
    EXIT_USAGE,
    DataError,
    InvalidParameter,
    MMVError,
    ParseError,
)
from harness import (
    PlantedConfig,
    bench_run,
    gen_planted,
    load_bench_config,
    read_instance_file,
    run_selfcheck,
    to_csv,
    write_instance,
    write_instance_file,
)
from matrix import matmul, nnz
from reduce import PROBLEMS, mmv_to_kmmv, route
from ring import parse_ring
from verify import (
    VERIFIERS,
    EntryWitness,
    Instance,
    KInstance,
    ParityRowWitness,
    TestVectorWitness,
    Verdict,
    VerifyParams,
    BitSource,
    mps_decide,
    run_verifier,
    validate_witness,
    verify_exact,
    verify_freivalds_k,
    verify_k_exact,
)
from verify.sparse import as_eps

logger = logging.getLogger("mmv")


# ───────────────────  Разбор аргументов  ──────────────────
class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mmv", description="Matrix multiplication verification toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a planted instance")
    gen.add_argument("--ring", required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--s", type=int, default=0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output")

    ver = sub.add_parser("verify", help="decide AB = C for an instance file")
    ver.add_argument("--alg", required=True, choices=[*VERIFIERS, "mps"])
    ver.add_argument("--t", type=int)
    ver.add_argument("--eps", default="1/2")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--rounds", type=int, default=1)
    ver.add_argument("--cross-check", action="store_true")
    ver.add_argument("file")

    red = sub.add_parser("reduce", help="rewrite an instance into another problem")
    red.add_argument("--from", dest="source", required=True, choices=PROBLEMS)
    red.add_argument("--to", dest="target", required=True, choices=PROBLEMS)
    red.add_argument("--k", type=int, default=2)
    red.add_argument("input")
    red.add_argument("output")

    bench = sub.add_parser("bench", help="run a benchmark grid and print CSV")
    bench.add_argument("--config", required=True)
    bench.add_argument("-o", "--output")
    bench.add_argument("--db", help="SQLite file that records the run (default: MMV_DB_PATH)")
    bench.add_argument("--threads", type=int)

    sub.add_parser("selfcheck", help="run the brute-force code oracles")
    return parser


# ───────────────────  Вывод вердикта  ──────────────────
def describe(verdict: Verdict) -> str:
    w = verdict.witness
    if w is None:
        text = verdict.answer.value
    elif isinstance(w, EntryWitness):
        text = f"{verdict.answer.value} entry {w.i} {w.j}"
    elif isinstance(w, TestVectorWitness):
        text = f"{verdict.answer.value} test-vector {w.side.value} index {w.index} over {w.ring.token}"
    elif isinstance(w, ParityRowWitness):
        text = f"{verdict.answer.value} parity-row {w.side.value} row {w.row} col {w.col} over {w.ring.token}"
    else:
        text = verdict.answer.value
    s = verdict.stats
    return f"{text}\nalg={verdict.alg} random_bits={s.random_bits} elem_ops={s.elem_ops} wall_nanos={s.wall_nanos}"


# ───────────────────  Команды  ──────────────────
def _ring_arg(token: str):
    # --ring — аргумент командной строки, а не данные файла
    try:
        return parse_ring(token)
    except ParseError as exc:
        raise InvalidParameter(f"--ring {token}: {exc}") from exc


def cmd_gen(args) -> int:
    inst = gen_planted(PlantedConfig(args.n, _ring_arg(args.ring), args.s, args.seed))
    if args.output:
        write_instance_file(args.output, inst)
    else:
        sys.stdout.write(write_instance(inst))
    return EXIT_EQUAL


def _cross_check(inst: Instance, verdict: Verdict, t: int) -> None:
    truth = verify_exact(inst)
    if truth.answer is not verdict.answer:
        residual = nnz(matmul(inst.A, inst.B) - inst.target).nnz
        if residual > t:
            logger.warning("promise violated: ‖AB − C‖₀ = %d > t = %d", residual, t)
        else:
            logger.error("%s disagrees with exact multiplication (‖AB − C‖₀ = %d)", verdict.alg, residual)
    if not verdict.equal and not validate_witness(inst, verdict):
        logger.error("%s produced a witness that does not check out", verdict.alg)


def _verify_k(kinst: KInstance, args) -> Verdict:
    if args.alg == "exact":
        return verify_k_exact(kinst)
    if args.alg == "freivalds":
        return verify_freivalds_k(kinst, args.rounds, BitSource(args.seed))
    raise InvalidParameter(f"{args.alg} does not verify k-products; use exact or freivalds")


def cmd_verify(args) -> int:
    inst = read_instance_file(args.file)
    if isinstance(inst, KInstance):
        verdict = _verify_k(inst, args)
    elif args.alg == "mps":
        r = args.t if args.t is not None else 0
        sparse = mps_decide(inst.A, inst.B, r)
        print(f"{'Sparse' if sparse else 'Dense'} r={r}")
        return EXIT_EQUAL if sparse else EXIT_NOT_EQUAL
    else:
        params = VerifyParams(args.t, as_eps(args.eps), args.rounds, args.seed)
        verdict = run_verifier(args.alg, inst, params)
        if args.cross_check:
            _cross_check(inst, verdict, params.promise(inst))
    print(describe(verdict))
    return EXIT_EQUAL if verdict.equal else EXIT_NOT_EQUAL


def cmd_reduce(args) -> int:
    inst = read_instance_file(args.input)
    if (args.source in ("kmmv", "kaz")) != isinstance(inst, KInstance):
        raise DataError(f"{args.input} does not hold a {args.source} instance")
    if (args.source, args.target) == ("mmv", "kmmv"):
        out = mmv_to_kmmv(inst, args.k)
    elif args.source == "mcapo":
        out = route(args.source, args.target)(inst.A)
    else:
        out = route(args.source, args.target)(inst)
    write_instance_file(args.output, out)
    logger.info("%s → %s: n %d → %d", args.source, args.target, inst.n, out.n)
    return EXIT_EQUAL


async def cmd_bench(args) -> int:
    config = load_bench_config(Path(args.config).read_text(encoding="utf-8"))
    threads = args.threads or load_config().workers
    rows = await bench_run(config, threads=threads)
    csv_text = to_csv(rows)
    if args.output:
        Path(args.output).write_text(csv_text, encoding="utf-8")
    else:
        sys.stdout.write(csv_text)

    db_path = args.db or load_config().db_path
    if db_path:
        db = Database(db_path)
        await db.connect()
        try:
            await db.record_run(config, rows, threads)
        finally:
            await db.close()
    return EXIT_EQUAL


def cmd_selfcheck(args) -> int:
    results = run_selfcheck()
    failed = [r for r in results if not r.ok]
    for r in failed:
        print(f"FAIL {r.name}")
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_EQUAL if not failed else EXIT_INTERNAL


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "reduce": cmd_reduce,
    "selfcheck": cmd_selfcheck,
}


# ───────────────────  Точка входа  ─────────────────────
async def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, load_config().log_level, logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    try:
        if args.command == "bench":
            return await cmd_bench(args)
        return COMMANDS[args.command](args)
    except MMVError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return exc.exit_code
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_DATA
    except Exception as exc:
        logger.exception("Unexpected failure: %s", exc)
        return EXIT_INTERNAL


if __name__ == "__main__":
    if sys.platform == "win32":
        asyncio.set_event_loop_policy(asyncio.WindowsSelectorEventLoopPolicy())

    sys.exit(asyncio.run(main()))
