"""Command-line front end."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import config
import resources
from api.exceptions import BoundViolationError, StrategicLabError, ValidationError
from api.feedback import FeedbackSetting
from api.pac import NeighborhoodMode
from api.protocol import Probe, collect_pac_sample
from repositories import FixtureStore, load_class, load_graph
from utils.json_utils import dump_json
from utils.suggestions import lookup

from .experiment import ExperimentConfig, FixtureSpec, Mode, load_config
from .matrix import run_matrix, write_matrix
from .runner import (
    build_fixture,
    dims_report,
    learn_graph,
    run_experiment,
    target_distribution,
)

logger = logging.getLogger(__name__)

_PARAM_FLAGS = (
    "d",
    "k",
    "n",
    "i_star",
    "class_size",
    "graphs",
    "graph_shift",
    "fixture_seed",
)


class Arguments(argparse.Namespace):
    command: str = ""
    name: str | None = None
    out: str | None = None
    fixture: str | None = None
    construction: str | None = None
    config: str | None = None
    learner: str | None = None
    learners: str = ""
    setting: str | None = None
    settings: str = ""
    source: str | None = None
    seed: list[int] | None = None
    rounds: int | None = None
    holdout: int | None = None
    noise: float | None = None
    epsilon: float | None = None
    mode: str | None = None
    tie_break: str | None = None
    class_file: str | None = None
    graph_file: str | None = None
    neighborhood_mode: str = NeighborhoodMode.REALIZABLE.value
    workers: int = config.MATRIX_WORKERS
    no_ceilings: bool = False
    no_floors: bool = False
    no_invariants: bool = False
    d: int | None = None
    k: int | None = None
    n: int | None = None
    i_star: int | None = None
    class_size: int | None = None
    graphs: int | None = None
    graph_shift: int | None = None
    fixture_seed: int | None = None


def _add_params(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("construction parameters")
    for flag in _PARAM_FLAGS:
        group.add_argument(f"--{flag.replace('_', '-')}", dest=flag, type=int)


def _add_fixture(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--fixture", help="Fixture directory written by `construct`.")
    source.add_argument(
        "--construction", help=", ".join(sorted(resources.CONSTRUCTIONS))
    )
    _add_params(parser)


def _add_run_options(parser: argparse.ArgumentParser) -> None:
    _add_fixture(parser)
    parser.add_argument("--config", help="Experiment config JSON; flags override it.")
    parser.add_argument("--source", help=resources.SOURCES_HELP)
    parser.add_argument("--seed", type=int, action="append", help="Repeatable.")
    parser.add_argument("--rounds", type=int)
    parser.add_argument("--holdout", type=int)
    parser.add_argument("--noise", type=float, help=resources.NOISE_HELP)
    parser.add_argument("--epsilon", type=float, help=resources.EPSILON_HELP)
    parser.add_argument("--mode", choices=[m.value for m in Mode])
    parser.add_argument("--tie-break", dest="tie_break", help=resources.TIE_BREAK_HELP)
    parser.add_argument("--out")
    parser.add_argument("--no-ceilings", dest="no_ceilings", action="store_true")
    parser.add_argument("--no-floors", dest="no_floors", action="store_true")
    parser.add_argument("--no-invariants", dest="no_invariants", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strategic-lab", description=resources.PROG_DESCRIPTION
    )
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help=resources.COMMAND_HELP["construct"])
    construct.add_argument("name", help=", ".join(sorted(resources.CONSTRUCTIONS)))
    construct.add_argument("--out")
    _add_params(construct)

    dims = commands.add_parser("dims", help=resources.COMMAND_HELP["dims"])
    dims.add_argument("--class", dest="class_file")
    dims.add_argument("--graph", dest="graph_file")
    _add_fixture(dims)

    run = commands.add_parser("run", help=resources.COMMAND_HELP["run"])
    _add_run_options(run)
    run.add_argument("--learner")
    run.add_argument("--setting", help=resources.SETTING_HELP)

    matrix = commands.add_parser("matrix", help=resources.COMMAND_HELP["matrix"])
    _add_run_options(matrix)
    matrix.add_argument("--learners", default="", help="Comma-separated learner names.")
    matrix.add_argument("--settings", default="", help="Comma-separated settings.")
    matrix.add_argument("--workers", type=int, default=config.MATRIX_WORKERS)

    learn = commands.add_parser("learn-graph", help=resources.COMMAND_HELP["learn-graph"])
    _add_fixture(learn)
    learn.add_argument("--rounds", type=int, default=200)
    learn.add_argument("--seed", type=int, action="append")
    learn.add_argument(
        "--neighborhood-mode",
        dest="neighborhood_mode",
        choices=[m.value for m in NeighborhoodMode],
        default=NeighborhoodMode.REALIZABLE.value,
    )
    return parser


def _params(args: Arguments) -> dict[str, int]:
    params = {
        flag: value
        for flag in _PARAM_FLAGS
        if (value := getattr(args, flag)) is not None
    }
    if "fixture_seed" in params:
        params["seed"] = params.pop("fixture_seed")
    return params


def _fixture_spec(args: Arguments) -> FixtureSpec | None:
    if args.fixture is not None:
        return FixtureSpec(directory=args.fixture)
    if args.construction is not None:
        return FixtureSpec(construction=args.construction, params=_params(args))
    return None


def _experiment(args: Arguments, learner: str | None) -> ExperimentConfig:
    spec = _fixture_spec(args)
    setting = FeedbackSetting.parse(args.setting) if args.setting else None
    mode = Mode(args.mode) if args.mode else None
    seeds = tuple(args.seed) if args.seed else None
    if args.config is not None:
        base = load_config(args.config)
    else:
        if spec is None:
            raise ValidationError(
                "No fixture given",
                user_message="Pass --fixture, --construction or --config",
            )
        base = ExperimentConfig(
            fixture=spec,
            learner=learner or "red2fi",
            seeds=seeds or (config.DEFAULT_SEED,),
        )
    return base.with_overrides(
        fixture=spec,
        learner=learner,
        seeds=seeds,
        setting=setting,
        mode=mode,
        rounds=args.rounds,
        holdout=args.holdout,
        noise=args.noise,
        epsilon=args.epsilon,
        source=args.source,
        tie_break=args.tie_break,
        out_dir=args.out,
        assert_ceilings=False if args.no_ceilings else None,
        assert_floors=False if args.no_floors else None,
        assert_invariants=False if args.no_invariants else None,
    )


def cmd_construct(args: Arguments) -> int:
    assert args.name is not None
    lookup("construction", args.name, resources.CONSTRUCTIONS)
    fixture = build_fixture(FixtureSpec(construction=args.name, params=_params(args)))
    out_dir = Path(args.out or config.OUTPUT_DIR / args.name)
    written = FixtureStore(out_dir).save(fixture)
    print(
        dump_json(
            {
                "name": fixture.name,
                "n": fixture.n,
                "class_size": len(fixture.cls),
                "files": [str(p) for p in written],
            }
        ),
        end="",
    )
    return resources.EXIT_OK


def cmd_dims(args: Arguments) -> int:
    if args.class_file is not None:
        cls = load_class(args.class_file)
        graph = load_graph(args.graph_file) if args.graph_file else None
    else:
        spec = _fixture_spec(args)
        if spec is None:
            raise ValidationError(
                "No class given", user_message="Pass --class, --fixture or --construction"
            )
        fixture = build_fixture(spec)
        cls = fixture.cls
        has_graph = fixture.graph is not None or fixture.target_graph is not None
        graph = fixture.star_graph if has_graph else None
    print(dump_json(dims_report(cls, graph)), end="")
    return resources.EXIT_OK


def cmd_run(args: Arguments) -> int:
    experiment = _experiment(args, args.learner)
    results = run_experiment(experiment)
    for result in results:
        print(dump_json({**result.summary, "passed": result.passed}), end="")  # pyright: ignore[reportArgumentType]
    return resources.EXIT_OK


def cmd_matrix(args: Arguments) -> int:
    experiment = _experiment(args, None)
    if experiment.mode is Mode.PAC:
        names = [s for s in args.learners.split(",") if s] or list(resources.PAC_LEARNERS)
        settings = [experiment.setting]
    else:
        names = [s for s in args.learners.split(",") if s] or list(
            resources.ONLINE_LEARNERS
        )
        settings = [
            FeedbackSetting.parse(s) for s in args.settings.split(",") if s
        ] or list(FeedbackSetting)
    for name in names:
        table = resources.PAC_LEARNERS if experiment.mode is Mode.PAC else resources.ONLINE_LEARNERS
        lookup("learner", name, table)
    outcomes = run_matrix(experiment, names, settings, args.workers)
    path = write_matrix(experiment, outcomes, Path(experiment.out_dir))
    failed = [o for o in outcomes if o.status == "FAIL"]
    print(
        dump_json(
            {
                "matrix": str(path),
                "cells": len(outcomes),
                "failed": len(failed),
                "skipped": sum(o.status == "skipped" for o in outcomes),
                "errors": sum(o.status == "error" for o in outcomes),
            }
        ),
        end="",
    )
    return resources.EXIT_ASSERTION_FAILED if failed else resources.EXIT_OK


def cmd_learn_graph(args: Arguments) -> int:
    spec = _fixture_spec(args)
    if spec is None:
        raise ValidationError(
            "No fixture given", user_message="Pass --fixture or --construction"
        )
    fixture = build_fixture(spec)
    mode = NeighborhoodMode(args.neighborhood_mode)
    for seed in args.seed or [config.DEFAULT_SEED]:
        dist = target_distribution(fixture, seed)
        sample = collect_pac_sample(
            fixture.star_graph, dist, args.rounds or 200, Probe.BUT_X, seed
        )
        print(dump_json({"seed": seed, **learn_graph(fixture, sample, dist, mode)}), end="")  # pyright: ignore[reportArgumentType]
    return resources.EXIT_OK


_COMMANDS = {
    "construct": cmd_construct,
    "dims": cmd_dims,
    "run": cmd_run,
    "matrix": cmd_matrix,
    "learn-graph": cmd_learn_graph,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv, namespace=Arguments())
    try:
        return _COMMANDS[args.command](args)
    except BoundViolationError as e:
        logger.error("Assertion failed: %s", e)
        print(e.user_message, file=sys.stderr)
        return resources.EXIT_ASSERTION_FAILED
    except StrategicLabError as e:
        logger.error("%s: %s", type(e).__name__, e)
        reached = getattr(e, "reached", None)
        suffix = f" (reached {reached})" if reached is not None else ""
        print(f"{e.user_message}{suffix}", file=sys.stderr)
        return resources.EXIT_ERROR
    except Exception:
        logger.exception("Unexpected error in %s", args.command)
        return resources.EXIT_ERROR
