"""Command-line interface: solve / verify / oracle / gen / bench.

Exit codes: 0 success, 1 invalid solution (verify), 2 usage error,
3 unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
import threading
from pathlib import Path

from .annealing import AnnealConfig
from .bench import render_csv, run_bench
from .generators import KINDS, generate_instance
from .graph import ParseError, parse_ds, parse_solution, write_solution
from .pipeline import ALGORITHMS, SolverConfig, StageTrace, solve
from .verification import brute_force_optimum, verify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _read_input(path: str | None) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algo", choices=ALGORITHMS, default="hedom5", help="algorithm to run")
    p.add_argument("--time-budget", type=float, default=10_000.0, metavar="MS", help="global time budget in milliseconds")
    p.add_argument("--attempt-cap", type=int, default=20, metavar="N", help="swap phase sweep cap")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--sa-t0", type=float, default=1.0, metavar="T", help="annealing initial temperature")
    p.add_argument("--sa-cool", type=float, default=0.995, metavar="F", help="annealing cooling factor per epoch")
    p.add_argument("--sa-moves", type=int, default=None, metavar="N", help="annealing moves per epoch (default max(100, n))")
    p.add_argument("--sa-epochs", type=int, default=None, metavar="N", help="annealing epoch cap (default 200 when --no-wallclock)")
    p.add_argument("--no-wallclock", action="store_true", help="replace time budgets with attempt counts for reproducible runs")


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    anneal = AnnealConfig(
        initial_temperature=args.sa_t0,
        cooling_factor=args.sa_cool,
        moves_per_epoch=args.sa_moves,
        seed=args.seed,
        max_epochs=args.sa_epochs if args.sa_epochs is not None else 200,
    )
    return SolverConfig(
        algorithm=args.algo,
        time_budget_ms=args.time_budget,
        attempt_cap=args.attempt_cap,
        seed=args.seed,
        anneal=anneal,
        wallclock=not args.no_wallclock,
    )


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        g = parse_ds(_read_input(args.input))
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    stop = threading.Event()
    for sig in (signal.SIGTERM, signal.SIGINT):
        try:
            signal.signal(sig, lambda *_: stop.set())
        except ValueError:
            pass  # not the main thread
    trace: list[StageTrace] | None = [] if args.trace else None
    sol = solve(g, _solver_config(args), trace=trace, stop=stop)
    if trace is not None:
        for entry in trace:
            print(json.dumps({"stage": entry.stage, "size": entry.size, "ms": round(entry.ms, 3)}), file=sys.stderr)
    sys.stdout.write(write_solution(sol))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = parse_ds(_read_input(args.graph))
        sol = parse_solution(Path(args.solution).read_bytes(), g.n)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    report = verify(g, sol)
    if report.valid:
        print(f"valid size={report.size}")
        return EXIT_OK
    print(f"invalid first_uncovered={report.first_uncovered + 1}")
    return EXIT_INVALID


def _cmd_oracle(args: argparse.Namespace) -> int:
    try:
        g = parse_ds(_read_input(args.input))
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        gamma, witness = brute_force_optimum(g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(gamma)
    print(" ".join(str(v + 1) for v in sorted(witness)))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        _, text = generate_instance(
            args.kind,
            args.seed,
            n=args.n,
            p=args.p,
            rows=args.rows,
            cols=args.cols,
            max_star=args.max_star,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return EXIT_IO
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    unknown = [a for a in algos if a not in ALGORITHMS]
    if not algos or unknown:
        print(f"error: bad algorithm list {args.algos!r}; choose from {','.join(ALGORITHMS)}", file=sys.stderr)
        return EXIT_USAGE
    paths = sorted(directory.glob("*.ds"))
    if not paths:
        print(f"warning: no .ds instances found in {directory}", file=sys.stderr)
    records = run_bench(paths, algos, _solver_config(args), oracle_max_n=args.oracle_max_n, jobs=args.jobs)
    csv_text = render_csv(records)
    if args.out is None or args.out == "-":
        sys.stdout.write(csv_text)
    else:
        Path(args.out).write_text(csv_text)
        print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domset", description="Dominating-set heuristics toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a .ds instance and print the solution")
    p_solve.add_argument("input", nargs="?", default=None, help=".ds file (default: stdin)")
    _add_solver_flags(p_solve)
    p_solve.add_argument("--trace", action="store_true", help="emit per-stage JSON lines on stderr")
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="check a solution file against a graph")
    p_verify.add_argument("graph", help=".ds instance")
    p_verify.add_argument("solution", help="solution file")
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="exact optimum for small instances (n <= 24)")
    p_oracle.add_argument("input", nargs="?", default=None, help=".ds file (default: stdin)")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("--kind", choices=KINDS, required=True)
    p_gen.add_argument("--n", type=int, default=None)
    p_gen.add_argument("--p", type=float, default=None)
    p_gen.add_argument("--rows", type=int, default=None)
    p_gen.add_argument("--cols", type=int, default=None)
    p_gen.add_argument("--max-star", type=int, default=None)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None, help="output file (default: stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="run an algorithm matrix over a corpus directory")
    p_bench.add_argument("--dir", required=True, help="directory of .ds instances")
    p_bench.add_argument("--algos", default="greedy,sa,hedom5", help="comma-separated algorithm list")
    _add_solver_flags(p_bench)
    p_bench.add_argument("--oracle-max-n", type=int, default=0, metavar="N", help="fill opt/gap columns for instances up to this size")
    p_bench.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p_bench.add_argument("--out", default=None, help="CSV output file (default: stdout)")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
