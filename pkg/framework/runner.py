"""Builds fixtures, learners and sources from a config and runs them."""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

import numpy as np

import config
from api.bounds import (
    binrep_floor,
    fi_ceiling,
    graph_class_floor,
    hedge_regret_ceiling,
    pmf_ceiling,
    star_floor,
    ug_ceiling,
)
from api.constructions import (
    Fixture,
    binary_rep_construction,
    chain_construction,
    corrupt_distribution,
    random_fixture,
    random_graph_class,
    realizable_distribution,
    star_singletons,
    superset_decoy,
    ug_online_lb_construction,
    ug_pac_lb_construction,
)
from api.dimensions import (
    induce_class,
    littlestone_dimension,
    vc_dimension,
    verify_vcd_upper,
)
from api.exceptions import BoundViolationError, ValidationError
from api.feedback import FeedbackSetting
from api.graphs import GraphClass, ManipulationGraph
from api.hypotheses import FiniteDistribution, HypothesisClass
from api.online import (
    HedgeOverCover,
    StandardBaseline,
    StrategicOnlineLearner,
    UnknownGraphMode,
    agnostic_online_fi,
    halving,
    red2online_fi,
    red2online_pmf,
    soa,
    ug_online,
)
from api.pac import (
    ClickObservation,
    LabeledObservation,
    NeighborhoodMode,
    erm_strategic,
    exact_neighborhood_loss,
    learn_neighborhoods,
    split_sample,
    strategic_loss_decomposition,
    ug_agnostic,
    ug_realizable,
)
from api.protocol import (
    AgentSource,
    IIDSource,
    Probe,
    Transcript,
    adversary,
    collect_pac_sample,
    run_online,
)
from api.strategic import population_strategic_loss
from api.tie_break import parse_rule
from repositories import TranscriptStore, load_fixture, save_sample
from resources import CONSTRUCTION_PARAMS, ONLINE_LEARNERS, PAC_LEARNERS
from utils.json_utils import save_json
from utils.suggestions import lookup

from .experiment import ExperimentConfig, FixtureSpec, Mode

logger = logging.getLogger(__name__)


# --- Fixtures ---


def _random_with_graphs(params: Mapping[str, int]) -> Fixture:
    fixture = random_fixture(
        params["n"], params["k"], params["class_size"], params["seed"]
    )
    count = params.get("graphs", 0)
    if count < 1:
        return fixture
    true_graph = fixture.star_graph
    if params.get("graph_shift", 0):
        # The class is drawn around a one-arc superset; the true graph stays outside it.
        shifted = superset_decoy(true_graph, np.random.default_rng(params["seed"]))
        if shifted is not None:
            graphs, _ = random_graph_class(shifted, count, params["seed"])
            return replace(
                fixture,
                graph_class=graphs,
                params={**fixture.params, "graphs": count, "graph_shift": 1},
            )
        logger.warning("Random fixture has no room for a shifted graph class")
    graphs, index = random_graph_class(true_graph, count, params["seed"])
    return replace(
        fixture,
        graph=None,
        graph_class=graphs,
        target_graph=index,
        params={**fixture.params, "graphs": count},
    )


_BUILDERS: dict[str, Callable[[Mapping[str, int]], Fixture]] = {
    "binrep": lambda p: binary_rep_construction(p["d"], p["k"]),
    "star": lambda p: star_singletons(p["d"], p["k"]),
    "ug-pac-lb": lambda p: ug_pac_lb_construction(p["n"], p.get("i_star", 1)),
    "ug-online-lb": lambda p: ug_online_lb_construction(p["n"]),
    "chain": lambda p: chain_construction(p["n"]),
    "random": _random_with_graphs,
}


def build_fixture(spec: FixtureSpec) -> Fixture:
    if spec.directory is not None:
        return load_fixture(spec.directory)
    assert spec.construction is not None
    builder = lookup("construction", spec.construction, _BUILDERS)
    required = CONSTRUCTION_PARAMS[spec.construction]
    missing = [p for p in required if p not in spec.params]
    if missing:
        raise ValidationError(
            f"Construction {spec.construction!r} needs {', '.join(missing)}",
            user_message=f"Missing parameters for {spec.construction}: {', '.join(missing)}",
        )
    return builder(spec.params)


def _graph_class(fixture: Fixture) -> GraphClass:
    if fixture.graph_class is None:
        raise ValidationError(
            f"Fixture {fixture.name!r} has no candidate graph class",
            user_message="Unknown-graph learners need a fixture with a graph class",
        )
    return fixture.graph_class.materialize()


# --- Online ---


def build_learner(
    name: str, fixture: Fixture, setting: FeedbackSetting, rounds: int, seed: int
) -> StrategicOnlineLearner:
    lookup("learner", name, ONLINE_LEARNERS)
    cls = fixture.cls
    match name:
        case "soa":
            return StandardBaseline(soa(cls))
        case "halving":
            return StandardBaseline(halving(cls))
        case "red2fi":
            return red2online_fi(soa(cls), fixture.star_graph)
        case "red2pmf":
            graph = fixture.star_graph if setting.graph_known else None
            return red2online_pmf(soa(cls), fixture.degree_bound, cls.n, graph)
        case "ug-online":
            return ug_online(cls, _graph_class(fixture), mode=UnknownGraphMode.X_THEN_V)
        case "ug-online-pair":
            return ug_online(
                cls, _graph_class(fixture), mode=UnknownGraphMode.PAIR_AFTER
            )
        case "mw-agnostic-fi":
            return agnostic_online_fi(cls, fixture.star_graph, rounds, seed)
        case _:
            raise ValidationError(f"No builder for learner {name!r}")


def target_distribution(
    fixture: Fixture, seed: int, noise: float = 0.0
) -> FiniteDistribution:
    """The target's realizable distribution, with `noise` mass label-flipped."""
    if fixture.target is None:
        raise ValidationError(
            f"Fixture {fixture.name!r} has no target hypothesis",
            user_message="i.i.d. agents need a fixture with a target hypothesis",
        )
    dist = realizable_distribution(fixture.star_graph, fixture.cls[fixture.target], seed)
    if noise:
        dist = corrupt_distribution(dist, Fraction(str(noise)), seed)
    return dist


def build_source(name: str, fixture: Fixture, seed: int) -> AgentSource:
    if name == "iid":
        dist = target_distribution(fixture, seed)
        assert fixture.target is not None
        return IIDSource(dist, fixture.star_graph, seed, fixture.cls[fixture.target])
    return adversary(name, fixture, seed)


@dataclass(frozen=True, slots=True)
class BoundCheck:
    name: str
    observed: float
    limit: float
    passed: bool

    def as_row(self) -> dict[str, str]:
        return {
            "check": self.name,
            "observed": f"{self.observed:g}",
            "limit": f"{self.limit:g}",
            "pass": "pass" if self.passed else "FAIL",
        }


def _at_most(name: str, observed: float, limit: float) -> BoundCheck:
    return BoundCheck(name, observed, limit, observed <= limit)


def _at_least(name: str, observed: float, limit: float) -> BoundCheck:
    return BoundCheck(name, observed, limit, observed >= limit)


def online_ceilings(
    name: str,
    fixture: Fixture,
    learner: StrategicOnlineLearner,
    transcript: Transcript,
    realizable: bool,
) -> list[BoundCheck]:
    """Mistake ceilings on realizable runs; the regret ceiling for Hedge."""
    if isinstance(learner, HedgeOverCover):
        ldim = littlestone_dimension(fixture.cls)
        full = fi_ceiling(ldim, fixture.star_graph.max_out_degree)
        regret = transcript.expected_regret
        if regret is None or learner.mistake_budget is None or learner.mistake_budget < full:
            return []
        limit = hedge_regret_ceiling(len(transcript), learner.initial_experts)
        return [_at_most("ceiling:hedge-regret", regret, limit)]
    if not realizable:
        return []
    mistakes = transcript.mistakes
    match name:
        case "red2fi":
            ldim = littlestone_dimension(fixture.cls)
            k = fixture.star_graph.max_out_degree
            return [_at_most("ceiling:fi", mistakes, fi_ceiling(ldim, k))]
        case "red2pmf":
            ldim = littlestone_dimension(fixture.cls)
            return [
                _at_most("ceiling:pmf", mistakes, pmf_ceiling(ldim, fixture.degree_bound))
            ]
        case "ug-online":
            ldim = littlestone_dimension(fixture.cls)
            graphs = _graph_class(fixture)
            limit = ug_ceiling(ldim, graphs.declared_k, len(graphs))
            return [_at_most("ceiling:ug", mistakes, limit)]
        case "soa" | "halving" if fixture.star_graph.arc_count == 0:
            ldim = littlestone_dimension(fixture.cls)
            limit = ldim if name == "soa" else math.floor(math.log2(len(fixture.cls)))
            return [_at_most(f"ceiling:{name}", mistakes, limit)]
        case _:
            return []


def online_floors(source: str, fixture: Fixture, transcript: Transcript) -> list[BoundCheck]:
    """Forced mistakes, capped at the number of rounds played."""
    params = fixture.params
    match source:
        case "fi-binrep":
            floor = binrep_floor(params["d"], params["k"])
        case "pmf-star":
            floor = star_floor(params["d"], params["k"])
        case "ug-online-lb" | "ug-chain":
            floor = graph_class_floor(params["n"])
        case _:
            return []
    limit = min(floor, len(transcript))
    return [_at_least(f"floor:{source}", transcript.mistakes, limit)]


def online_invariants(transcript: Transcript, realizable: bool) -> list[BoundCheck]:
    if not realizable:
        return []
    checks = [_at_most("invariant:target-loss", transcript.target_loss or 0, 0)]
    if transcript.best_loss is not None:
        checks.append(_at_most("invariant:best-loss", transcript.best_loss, 0))
    return checks


# --- Results ---


@dataclass(slots=True)
class RunResult:
    config: ExperimentConfig
    seed: int
    summary: dict[str, object]
    checks: list[BoundCheck] = field(default_factory=list[BoundCheck])
    transcript: Transcript | None = None
    sample: list[LabeledObservation] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def stem(self) -> str:
        c = self.config
        setting = c.setting.value if c.mode is Mode.ONLINE else "pac"
        raw = f"{c.fixture.label}_{c.learner}_{setting}_{c.source}_s{self.seed}"
        return re.sub(r"[^A-Za-z0-9_.-]+", "-", raw).strip("-")


def run_online_cell(experiment: ExperimentConfig, seed: int) -> RunResult:
    fixture = build_fixture(experiment.fixture)
    learner = build_learner(
        experiment.learner, fixture, experiment.setting, experiment.rounds, seed
    )
    source = build_source(experiment.source, fixture, seed)
    transcript = run_online(
        learner,
        source,
        experiment.setting,
        experiment.rounds,
        cls=fixture.cls,
        rule=parse_rule(experiment.tie_break),
        fixture=experiment.fixture.label,
        learner_name=experiment.learner,
        seed=seed,
    )
    checks: list[BoundCheck] = []
    if experiment.assert_ceilings:
        checks += online_ceilings(
            experiment.learner, fixture, learner, transcript, source.realizable
        )
    if experiment.assert_floors:
        checks += online_floors(experiment.source, fixture, transcript)
    if experiment.assert_invariants:
        checks += online_invariants(transcript, source.realizable)
    return RunResult(experiment, seed, transcript.summary(), checks, transcript)


# --- PAC ---


def _clicks(n: int, sample: list[LabeledObservation]) -> list[ClickObservation]:
    return [
        ClickObservation(
            o.x,
            frozenset(u for u in range(n) if u != o.x),
            o.v if o.moved else None,
        )
        for o in sample
    ]


def learn_graph(
    fixture: Fixture,
    sample: list[LabeledObservation],
    dist: FiniteDistribution,
    mode: NeighborhoodMode = NeighborhoodMode.REALIZABLE,
) -> dict[str, object]:
    """Learn the true graph from full-probe clicks replayed out of a but-x sample."""
    graphs = _graph_class(fixture)
    star = fixture.star_graph
    index = learn_neighborhoods(graphs, _clicks(star.n, sample), mode)
    return {
        "mode": mode.value,
        "graph_index": index,
        "target_graph": fixture.target_graph,
        "neighborhood_loss": float(exact_neighborhood_loss(graphs[index], star, dist)),
    }


@dataclass(frozen=True, slots=True)
class PacLosses:
    """Exact losses of one PAC cell next to the best the classes allow."""

    best: Fraction
    """Least strategic loss of any hypothesis under the true graph."""
    best_neighborhood: Fraction | None = None
    """Least neighborhood loss in the candidate graph class, when there is one."""
    strategic: Fraction | None = None
    neighborhood: Fraction | None = None
    decomposition: tuple[Fraction, Fraction, Fraction] | None = None
    """(true loss, neighborhood loss, loss under the chosen graph) of the output."""

    @property
    def realizable(self) -> bool:
        return self.best == 0 and not self.best_neighborhood


def best_losses(fixture: Fixture, dist: FiniteDistribution) -> PacLosses:
    star = fixture.star_graph
    best = min(population_strategic_loss(star, h, dist) for h in fixture.cls)
    if fixture.graph_class is None:
        return PacLosses(best)
    best_nb = min(exact_neighborhood_loss(g, star, dist) for g in _graph_class(fixture))
    return PacLosses(best, best_nb)


def pac_ceilings(
    learner: str, losses: PacLosses, k: int, epsilon: float
) -> list[BoundCheck]:
    """Exact-loss ceilings; the unknown-graph realizable one needs realizable data."""
    match learner:
        case "erm" if losses.strategic is not None:
            limit = float(losses.best) + epsilon
            return [_at_most("ceiling:erm", float(losses.strategic), limit)]
        case "ug-rel" if losses.strategic is not None and losses.realizable:
            return [_at_most("ceiling:ug-rel", float(losses.strategic), epsilon)]
        case "ug-agn" if losses.strategic is not None:
            assert losses.best_neighborhood is not None
            limit = 6 * max(k, 1) * float(losses.best_neighborhood)
            limit += float(losses.best) + epsilon
            return [_at_most("ceiling:ug-agn", float(losses.strategic), limit)]
        case "neighborlearn" if losses.neighborhood is not None and losses.realizable:
            observed = float(losses.neighborhood)
            return [_at_most("ceiling:neighborhood", observed, epsilon)]
        case _:
            return []


def pac_invariants(losses: PacLosses) -> list[BoundCheck]:
    if losses.decomposition is None:
        return []
    true_loss, neighborhood, under_chosen = losses.decomposition
    return [
        _at_most(
            "invariant:decomposition",
            float(true_loss),
            float(neighborhood + under_chosen),
        )
    ]


def run_pac_cell(experiment: ExperimentConfig, seed: int) -> RunResult:
    lookup("learner", experiment.learner, PAC_LEARNERS)
    fixture = build_fixture(experiment.fixture)
    star = fixture.star_graph
    dist = target_distribution(fixture, seed, experiment.noise)
    probe = Probe.ALL_POSITIVE if experiment.learner == "erm" else Probe.BUT_X
    sample = collect_pac_sample(star, dist, experiment.rounds, probe, seed)
    losses = best_losses(fixture, dist)
    summary: dict[str, object] = {
        "fixture": experiment.fixture.label,
        "learner": experiment.learner,
        "seed": seed,
        "rounds": experiment.rounds,
        "probe": probe.value,
        "noise": experiment.noise,
        "best_loss": float(losses.best),
    }
    if losses.best_neighborhood is not None:
        summary["best_neighborhood_loss"] = float(losses.best_neighborhood)
    match experiment.learner:
        case "erm":
            h = erm_strategic(star, fixture.cls, [o.agent for o in sample])
            summary["hypothesis_index"] = fixture.cls.index_of(h)
            losses = replace(losses, strategic=population_strategic_loss(star, h, dist))
        case "ug-rel" | "ug-agn":
            graphs = _graph_class(fixture)
            if experiment.learner == "ug-rel":
                pair = ug_realizable(graphs, fixture.cls, sample)
            else:
                if experiment.holdout:
                    s1 = sample
                    s2 = collect_pac_sample(
                        star, dist, experiment.holdout, probe, seed + 1
                    )
                else:
                    s1, s2 = split_sample(sample, graphs.declared_k)
                pair = ug_agnostic(graphs, fixture.cls, s1, s2, graphs.declared_k)
            graph, h = pair.resolve(graphs, fixture.cls)
            summary["graph_index"] = pair.graph_index
            summary["hypothesis_index"] = pair.hypothesis_index
            summary["empirical_degree"] = pair.empirical_degree
            decomposition = strategic_loss_decomposition(graph, star, h, dist)
            losses = replace(
                losses,
                strategic=decomposition[0],
                neighborhood=decomposition[1],
                decomposition=decomposition,
            )
        case "neighborlearn":
            summary.update(learn_graph(fixture, sample, dist))
            loss = summary["neighborhood_loss"]
            assert isinstance(loss, float)
            losses = replace(losses, neighborhood=Fraction(loss))
        case _:
            raise ValidationError(f"No builder for learner {experiment.learner!r}")
    if losses.strategic is not None:
        summary["strategic_loss"] = float(losses.strategic)
    if losses.neighborhood is not None:
        summary["neighborhood_loss"] = float(losses.neighborhood)
    checks: list[BoundCheck] = []
    if experiment.assert_ceilings:
        checks += pac_ceilings(
            experiment.learner, losses, fixture.degree_bound, experiment.epsilon
        )
    if experiment.assert_invariants:
        checks += pac_invariants(losses)
    return RunResult(experiment, seed, summary, checks, sample=sample)


# --- Experiments ---


def run_cell(experiment: ExperimentConfig, seed: int) -> RunResult:
    if experiment.mode is Mode.PAC:
        return run_pac_cell(experiment, seed)
    return run_online_cell(experiment, seed)


def write_result(result: RunResult, out_dir: Path) -> None:
    store = TranscriptStore(out_dir)
    extra: dict[str, object] = {
        "checks": [c.as_row() for c in result.checks],
        "passed": result.passed,
    }
    if result.transcript is not None:
        store.save(result.stem, result.transcript, extra)  # pyright: ignore[reportArgumentType]
    else:
        save_json(
            out_dir / f"{result.stem}.json",
            {**result.summary, **extra},  # pyright: ignore[reportArgumentType]
        )
    if result.sample is not None:
        save_sample(out_dir / f"{result.stem}_{config.SAMPLE_FILE_NAME}", result.sample)


def run_experiment(experiment: ExperimentConfig, write: bool = True) -> list[RunResult]:
    """One run per seed; raises BoundViolationError after writing if any check failed."""
    out_dir = Path(experiment.out_dir)
    results = [run_cell(experiment, seed) for seed in experiment.seeds]
    if write:
        for result in results:
            write_result(result, out_dir)
    failures = [(r.seed, c) for r in results for c in r.failures]
    if failures:
        seed, check = failures[0]
        raise BoundViolationError(
            f"{len(failures)} check(s) failed; first: {check.name} "
            f"(observed {check.observed:g}, limit {check.limit:g}, seed {seed})",
            user_message=f"Violated {check.name}: {check.observed:g} vs limit {check.limit:g}",
        )
    return results


def dims_report(cls: HypothesisClass, graph: ManipulationGraph | None = None) -> dict[str, object]:
    """Dimensions of the class and, given a graph, of its induced class."""
    report: dict[str, object] = {
        "n": cls.n,
        "class_size": len(cls),
        "d": vc_dimension(cls),
        "ldim": littlestone_dimension(cls),
    }
    if graph is None:
        return report
    bound = verify_vcd_upper(graph, cls)
    induced = induce_class(graph, cls)
    ldim_induced = littlestone_dimension(induced)
    report |= {
        "k": bound.k,
        "dbar": bound.d_bar,
        "ldim_induced": ldim_induced,
        "vc_bound": bound.bound,
        "vc_bound_holds": bound.holds,
        "vc_sauer_bound": bound.sauer_bound,
        "vc_near_bound": bound.near_bound,
        "dbar_at_most_ldim_induced": bound.d_bar <= ldim_induced,
    }
    return report
