# harness/cli.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
The lowrank-strang command line.

Exit codes: 0 on success, 2 for configuration errors and 3 when a required integration
diverges.

"""
import argparse
import json
import logging
import sys
import time
from pathlib import Path
from lowrank_strang.config import config
from lowrank_strang.exceptions import ConfigurationError, NumericalDivergenceError
from lowrank_strang.harness.adaptive import adaptive_rank_run
from lowrank_strang.harness.manifest import write_manifest
from lowrank_strang.harness.reference import ReferencePolicy, reference_solution
from lowrank_strang.harness.svdump import singular_value_dump
from lowrank_strang.harness.sweep import convergence_sweep
from lowrank_strang.integrators import Scheme
from lowrank_strang.problems import ProblemLabel

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIGURATION = 2
EXIT_DIVERGENCE = 3


def _list_of(kind):
    def parse(text: str) -> list:
        try:
            return [kind(item) for item in text.split(",") if item.strip()]
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"invalid list '{text}'") from exc

    return parse


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--problem", required=True, choices=[label.value for label in ProblemLabel]
    )
    parser.add_argument("--m", type=int, help="interior grid points per direction")
    parser.add_argument("--T", type=float, help="final time")
    parser.add_argument("--seed", type=int, help="seed of random problem data")


def build_parser() -> argparse.ArgumentParser:
    """Returns the parser of every subcommand."""
    parser = argparse.ArgumentParser(
        prog="lowrank-strang",
        description="Low-rank Strang splitting experiments.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    converge = commands.add_parser("converge", help="errors and orders over (tau, rank)")
    _common(converge)
    converge.add_argument("--taus", type=_list_of(float), required=True)
    converge.add_argument("--ranks", type=_list_of(int))
    converge.add_argument("--theta", type=_list_of(float))
    converge.add_argument("--tau-ref", type=float)
    converge.add_argument("--workers", type=int)
    converge.add_argument(
        "--scheme", default=Scheme.LOWRANK_STRANG.value, choices=[s.value for s in Scheme]
    )
    converge.add_argument("--checkpoints", type=Path, help="reference checkpoint directory")
    converge.add_argument("--out", type=Path, required=True, help="output directory")

    svdump = commands.add_parser("svdump", help="leading singular values at T")
    _common(svdump)
    svdump.add_argument(
        "--scheme", default=Scheme.FULLRANK_STRANG.value, choices=[s.value for s in Scheme]
    )
    svdump.add_argument("--tau", type=float)
    svdump.add_argument("--k", type=int, default=10)
    svdump.add_argument("--out", type=Path, required=True, help="output CSV file")

    adaptive = commands.add_parser("adaptive", help="rank adaptive integration")
    _common(adaptive)
    adaptive.add_argument("--tau", type=float, required=True)
    adaptive.add_argument("--theta", type=float, required=True)
    adaptive.add_argument("--rank", type=int, required=True, help="initial rank")
    adaptive.add_argument("--out", type=Path, required=True, help="output CSV file")

    reference = commands.add_parser("reference", help="dense reference checkpoint")
    _common(reference)
    reference.add_argument("--tau-ref", type=float)
    reference.add_argument(
        "--policy",
        default=config.harness["reference_policy"],
        choices=[policy.value for policy in ReferencePolicy],
    )
    reference.add_argument("--out", type=Path, required=True, help="checkpoint directory")

    run = commands.add_parser("run", help="run a command described by a JSON file")
    run.add_argument("--config", type=Path, required=True)
    return parser


def _settings(args: argparse.Namespace) -> dict:
    return {
        key: str(value) if isinstance(value, Path) else value
        for key, value in vars(args).items()
    }


def _converge(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    report = convergence_sweep(
        args.problem,
        args.taus,
        ranks=args.ranks,
        thetas=args.theta,
        out=args.out / f"{args.problem}_convergence.csv",
        m=args.m,
        T=args.T,
        seed=args.seed,
        tau_ref=args.tau_ref,
        workers=args.workers,
        scheme=args.scheme,
        checkpoint_dir=args.checkpoints,
    )
    print(report)
    write_manifest(
        args.out / "manifest.json",
        "converge",
        _settings(args),
        time.perf_counter() - started,
        cells=[row._asdict() for row in report.rows],
        orders=report.orders,
        deltas=report.deltas,
    )
    if report.diverged:
        logger.error("%d cells diverged", len(report.diverged))
        return EXIT_DIVERGENCE
    return EXIT_OK


def _svdump(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    report = singular_value_dump(
        args.problem,
        scheme=args.scheme,
        tau=args.tau,
        T=args.T,
        k=args.k,
        out=args.out,
        m=args.m,
        seed=args.seed,
    )
    print(report)
    write_manifest(
        args.out.with_name(args.out.name + ".manifest.json"),
        "svdump",
        _settings(args),
        time.perf_counter() - started,
        singular_values=report.values.tolist(),
    )
    return EXIT_OK


def _adaptive(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    history = adaptive_rank_run(
        args.problem,
        args.tau,
        args.theta,
        args.rank,
        T=args.T,
        out=args.out,
        m=args.m,
        seed=args.seed,
    )
    print(history)
    write_manifest(
        args.out.with_name(args.out.name + ".manifest.json"),
        "adaptive",
        _settings(args),
        time.perf_counter() - started,
        max_rank=history.max_rank,
    )
    return EXIT_OK


def _reference(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    solution = reference_solution(
        args.problem,
        policy=args.policy,
        tau_ref=args.tau_ref,
        m=args.m or config.harness["reference_m"],
        T=args.T,
        seed=args.seed,
        directory=args.out,
    )
    print(f"{solution.path} ({'cached' if solution.cache_hit else 'computed'})")
    write_manifest(
        args.out / "manifest.json",
        "reference",
        _settings(args),
        time.perf_counter() - started,
        path=str(solution.path),
        content_hash=solution.content_hash,
        cache_hit=solution.cache_hit,
    )
    return EXIT_OK


def _run(args: argparse.Namespace) -> int:
    try:
        settings = json.loads(args.config.read_text())
    except (OSError, ValueError) as exc:
        raise ConfigurationError(f"Cannot read run configuration {args.config}: {exc}") from exc
    if not isinstance(settings, dict) or settings.get("command") in (None, "run"):
        raise ConfigurationError(
            f"The run configuration {args.config} must name a command other than 'run'."
        )
    argv = [settings.pop("command")]
    for key, value in settings.items():
        flag = "--" + key.replace("_", "-")
        if isinstance(value, list):
            value = ",".join(str(item) for item in value)
        argv += [flag, str(value)]
    return main(argv)


COMMANDS = {
    "converge": _converge,
    "svdump": _svdump,
    "adaptive": _adaptive,
    "reference": _reference,
    "run": _run,
}


def main(argv=None) -> int:
    """
    Parses the arguments and runs a subcommand.

    Args:
        argv (`list`, optional): The arguments. Defaults to sys.argv[1:].

    Returns:
        int: The exit code.
    """
    if not logging.getLogger().handlers:
        logging.basicConfig(
            level=config.logging["level"], format=config.logging["format"]
        )
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code == 0 else EXIT_CONFIGURATION
    try:
        return COMMANDS[args.command](args)
    except ConfigurationError as error:
        logger.error("%s", error)
        return EXIT_CONFIGURATION
    except NumericalDivergenceError as error:
        logger.error("%s", error)
        return EXIT_DIVERGENCE


if __name__ == "__main__":
    sys.exit(main())
